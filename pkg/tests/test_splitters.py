import pytest

from listalloc.errors import CapExceeded
from listalloc.splitters import (
    SeparatingFamily,
    build_separating_family,
    verify_family,
)


class TestBuild:
    def test_empty_a(self):
        fam = build_separating_family(5, 0, 2, mode="exhaustive")
        assert fam.mode == "exhaustive-verified"
        assert frozenset() in fam.sets
        assert verify_family(fam)

    def test_empty_b(self):
        fam = build_separating_family(5, 2, 0, mode="exhaustive")
        assert frozenset(range(5)) in fam.sets
        assert verify_family(fam)

    def test_singletons(self):
        fam = build_separating_family(4, 1, 1, mode="exhaustive")
        assert verify_family(fam)
        # spot-check the defining property on all ordered singleton pairs
        for a in range(4):
            for b in range(4):
                if a == b:
                    continue
                assert any(a in s and b not in s for s in fam.sets)

    def test_exhaustive_mode_always_certified(self):
        for n in range(0, 7):
            for a in range(0, 3):
                for b in range(0, 3):
                    fam = build_separating_family(n, a, b, mode="exhaustive")
                    assert fam.mode == "exhaustive-verified"
                    assert verify_family(fam)

    def test_exhaustive_cap(self):
        with pytest.raises(CapExceeded):
            build_separating_family(40, 2, 2, mode="exhaustive")

    def test_deterministic(self):
        one = build_separating_family(6, 2, 2, mode="exhaustive")
        two = build_separating_family(6, 2, 2, mode="exhaustive")
        assert one.sets == two.sets


class TestRandomized:
    def test_records_parameters(self):
        fam = build_separating_family(30, 1, 3, mode="randomized", seed=5, failure_bound=1e-4)
        assert fam.mode == "randomized"
        assert fam.seed == 5 and fam.failure_bound == 1e-4
        assert len(fam.sets) >= 1

    def test_seed_determinism(self):
        one = build_separating_family(25, 2, 2, mode="randomized", seed=9)
        two = build_separating_family(25, 2, 2, mode="randomized", seed=9)
        assert one.sets == two.sets

    def test_small_universe_coverage(self):
        # failure bound is tiny, so coverage should hold on a checkable size
        fam = build_separating_family(8, 1, 2, mode="randomized", seed=3, failure_bound=1e-9)
        assert verify_family(fam)

    def test_auto_falls_back(self):
        fam = build_separating_family(64, 2, 2, mode="auto")
        assert fam.mode == "randomized"


def test_family_dataclass_shape():
    fam = build_separating_family(4, 1, 1, mode="exhaustive")
    assert isinstance(fam, SeparatingFamily)
    assert fam.n == 4 and fam.a == 1 and fam.b == 1
    assert all(isinstance(s, frozenset) for s in fam.sets)
