"""Integer partitions, symmetric-group characters, and set partitions."""

from itertools import permutations
from math import factorial

import pytest

from wfact.errors import CapabilityError
from wfact.partitions import (
    content_sum,
    cycle_type,
    hook_dimension,
    integer_partitions,
    mn_character,
    refines,
    restrict_perm,
    set_partitions,
)

BELL = {1: 1, 2: 2, 3: 5, 4: 15, 5: 52, 6: 203, 7: 877, 8: 4140}


def _centralizer_order(mu):
    out = 1
    for part in set(mu):
        m = mu.count(part)
        out *= part**m * factorial(m)
    return out


# ---------------------------------------------------------------- partitions


def test_integer_partition_counts():
    expected = {1: 1, 2: 2, 3: 3, 4: 5, 5: 7, 6: 11, 7: 15, 8: 22}
    for n, count in expected.items():
        parts = integer_partitions(n)
        assert len(parts) == count
        for lam in parts:
            assert sum(lam) == n
            assert all(a >= b for a, b in zip(lam, lam[1:]))


# ---------------------------------------------------------------- hooks


def test_hook_dimension_examples():
    for n in range(1, 7):
        assert hook_dimension((n,)) == 1
    assert hook_dimension((2, 1)) == 2
    assert hook_dimension((2, 2)) == 2


def test_hook_dimension_square_sum():
    for n in range(1, 9):
        assert sum(hook_dimension(lam) ** 2 for lam in integer_partitions(n)) == (
            factorial(n)
        )


# ---------------------------------------------------------------- contents


def test_content_sum_examples():
    for n in range(1, 7):
        assert content_sum((n,)) == n * (n - 1) // 2
    assert content_sum((1, 1, 1)) == -3
    assert content_sum((2, 1)) == 0


# ---------------------------------------------------------------- characters


def test_mn_identity_column():
    for n in range(1, 8):
        for lam in integer_partitions(n):
            assert mn_character(lam, (1,) * n) == hook_dimension(lam)


def test_mn_single_strip():
    assert mn_character((2, 1), (3,)) == -1


def test_mn_trivial_character():
    for n in range(1, 7):
        for mu in integer_partitions(n):
            assert mn_character((n,), mu) == 1


def test_mn_sign_character():
    for n in range(1, 7):
        for mu in integer_partitions(n):
            sign = (-1) ** (n - len(mu))
            assert mn_character((1,) * n, mu) == sign


def test_mn_size_mismatch():
    with pytest.raises(ValueError):
        mn_character((2, 1), (2,))


def test_column_orthogonality():
    for n in range(1, 7):
        classes = integer_partitions(n)
        shapes = integer_partitions(n)
        for mu in classes:
            for nu in classes:
                total = sum(
                    mn_character(lam, mu) * mn_character(lam, nu) for lam in shapes
                )
                assert total == (_centralizer_order(mu) if mu == nu else 0)


def test_transposition_class_sum_identity():
    # sum_lam f_lam * content_sum(lam) * chi_lam(mu) counts transposition
    # factors: it is n! on the single-transposition class and 0 elsewhere
    for n in range(2, 7):
        for mu in integer_partitions(n):
            total = sum(
                hook_dimension(lam) * content_sum(lam) * mn_character(lam, mu)
                for lam in integer_partitions(n)
            )
            is_transposition_class = sorted(mu, reverse=True) == [2] + [1] * (n - 2)
            assert total == (factorial(n) if is_transposition_class else 0)


# ---------------------------------------------------------------- cycle type


def test_cycle_type():
    assert cycle_type((1, 2, 3)) == (1, 1, 1)
    assert cycle_type((2, 1, 3)) == (2, 1)
    assert cycle_type((2, 3, 1)) == (3,)
    assert cycle_type((2, 1, 4, 3)) == (2, 2)


# ---------------------------------------------------------------- set partitions


def test_set_partition_counts():
    for n, bell in BELL.items():
        parts = set_partitions(n)
        assert len(parts) == bell
        for blocks in parts:
            flat = sorted(x for block in blocks for x in block)
            assert flat == list(range(1, n + 1))
            # canonical order: blocks sorted by minimum, elements ascending
            minima = [block[0] for block in blocks]
            assert minima == sorted(minima)
            for block in blocks:
                assert list(block) == sorted(block)


def test_set_partitions_guard():
    with pytest.raises(CapabilityError):
        set_partitions(11)


def test_refines_bottom_and_top():
    n = 4
    parts = set_partitions(n)
    bottom = tuple(tuple([i]) for i in range(1, n + 1))
    top = (tuple(range(1, n + 1)),)
    for q in parts:
        assert refines(bottom, q)
        assert refines(q, top)
    assert not refines(top, bottom)


def test_refines_is_partial_order():
    parts = set_partitions(4)
    for a in parts:
        assert refines(a, a)
        for b in parts:
            if refines(a, b) and refines(b, a):
                assert a == b


def test_restrict_perm():
    # (12)(3): restriction to {1,2} is the transposition of a 2-set
    assert restrict_perm((2, 1, 3), (1, 2)) == (2, 1)
    assert restrict_perm((2, 1, 3), (3,)) == (1,)
    # relabelling keeps cycle structure: (34) inside {3,4} -> (21)
    assert restrict_perm((1, 2, 4, 3), (3, 4)) == (2, 1)


def test_restrict_perm_rejects_unstable_block():
    with pytest.raises(ValueError):
        restrict_perm((2, 3, 1), (1, 2))


def test_restriction_respects_composition():
    # restricting a block-stabilizing product equals the product of restrictions
    block = (1, 3, 4)
    perms = [p for p in permutations(range(1, 5)) if {p[0], p[2], p[3]} == {1, 3, 4}]
    for u in perms:
        for v in perms:
            uv = tuple(u[v[i] - 1] for i in range(4))
            lhs = restrict_perm(uv, block)
            ru, rv = restrict_perm(u, block), restrict_perm(v, block)
            rhs = tuple(ru[rv[i] - 1] for i in range(3))
            assert lhs == rhs
