from hypothesis import given, strategies as st

from cftv.partitions import (
    EMPTY,
    Partition,
    conjugate,
    enumerate_partitions,
    partitions_of_weight,
    shifted_parts,
)


def brute_count(w, max_part=None):
    if w == 0:
        return 1
    max_part = w if max_part is None else max_part
    return sum(brute_count(w - k, k) for k in range(1, min(w, max_part) + 1))


def test_enumerate_examples():
    assert enumerate_partitions(0, 5) == [EMPTY]
    got = enumerate_partitions(3, 2)
    assert got == [(), (1,), (2,), (1, 1), (3,), (2, 1)]
    assert len(got) == 6
    assert sum(1 for p in enumerate_partitions(4, 4) if p.weight == 4) == 5


def test_counts_match_recursion():
    for w in range(13):
        assert len(partitions_of_weight(w)) == brute_count(w)


def test_canonical_form_strips_zeros():
    assert Partition((2, 1, 0, 0)) == Partition((2, 1))
    assert Partition.parse("2,1") == Partition((2, 1))
    assert Partition.parse("") == EMPTY


def test_conjugate_examples():
    assert conjugate((2, 1)) == (2, 1)
    assert conjugate((4,)) == (1, 1, 1, 1)
    assert conjugate(()) == ()


def test_conjugate_involution_exhaustive():
    for lam in enumerate_partitions(8, 8):
        assert conjugate(conjugate(lam)) == lam
        assert conjugate(lam).weight == lam.weight


def test_shifted_parts_examples():
    assert shifted_parts((2, 1), 3) == (4, 2, 0)
    assert shifted_parts((), 3) == (2, 1, 0)
    assert shifted_parts((5,), 1) == (5,)


@given(st.integers(1, 4))
def test_shifted_parts_strict_and_injective(m):
    seen = set()
    for lam in enumerate_partitions(6, m):
        f = shifted_parts(lam, m)
        assert all(a > b for a, b in zip(f, f[1:]))
        assert f not in seen
        seen.add(f)


@given(st.lists(st.integers(0, 6), max_size=5))
def test_text_roundtrip(parts):
    lam = Partition(sorted(parts, reverse=True))
    assert Partition.parse(lam.text()) == lam
