"""Shared fixtures: the regression suite of cyclic groups used across the
test modules, with their hand-checked invariants (order, per-element fixed
space codimensions, total dimension, transfer image)."""

import pytest

from skewcoh import Field, group_from_generator

F3 = Field.prime(3)
F5 = Field.prime(5)
F7 = Field.prime(7)
Q = Field.rational()

# name -> (field, generator rows, order, codims, per-element dims, dim im T)
SUITE = {
    "transvection_f3": (F3, [[1, 1], [0, 1]], 3, [0, 1, 1], [2, 2, 2], 0),
    "transvection_f5": (F5, [[1, 1], [0, 1]], 5, [0, 1, 1, 1, 1], [2] * 5, 0),
    "transvection_f7": (F7, [[1, 1], [0, 1]], 7, [0] + [1] * 6, [2] * 7, 0),
    "diag_1_m1_f5": (F5, [[1, 0], [0, -1]], 2, [0, 1], [1, 0], 1),
    "diag_2_3_f5": (F5, [[2, 0], [0, 3]], 4, [0, 2, 2, 2], [0, 0, 0, 0], 0),
    "rot4_f5": (F5, [[0, -1], [1, 0]], 4, [0, 2, 2, 2], [0, 0, 0, 0], 0),
    "rot4_q": (Q, [[0, -1], [1, 0]], 4, [0, 2, 2, 2], [0, 0, 0, 0], 0),
    "jordan3_refl_f3": (F3, [[1, 1, 0], [0, 1, 0], [0, 0, -1]], 6,
                        [0, 2, 1, 1, 1, 2], [3, 0, 3, 0, 3, 0], 0),
    "jordan4_refl_f3": (F3, [[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 0], [0, 0, 0, -1]], 6,
                        [0, 3, 2, 1, 2, 3], [4, 0, 1, 0, 1, 0], 1),
    "diag_2_3_4_f5": (F5, [[2, 0, 0], [0, 3, 0], [0, 0, 4]], 4,
                      [0, 3, 2, 3], [2, 0, 0, 0], 0),
    "companion8_f3": (F3, [[0, 0, 0, -1], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]], 8,
                      [0] + [4] * 7, [0] * 8, 0),
    "trivial_n1_q": (Q, [[1]], 1, [0], [0], 1),
    "trivial_n2_f3": (F3, [[1, 0], [0, 1]], 1, [0], [2], 2),
    "trivial_n3_q": (Q, [[1, 0, 0], [0, 1, 0], [0, 0, 1]], 1, [0], [9], 3),
}


def suite_group(name):
    field, rows = SUITE[name][0], SUITE[name][1]
    return group_from_generator(field, rows)


@pytest.fixture(params=sorted(SUITE))
def suite_entry(request):
    """(name, group, order, codims, per-element dims, dim im T) for each
    suite member in turn."""
    name = request.param
    field, rows, order, codims, dims, imt = SUITE[name]
    return name, group_from_generator(field, rows), order, codims, dims, imt
