"""The verification-check registry and runner."""

import pytest

from pa import verify


class TestRegistry:
    def test_twelve_checks(self):
        assert len(verify.CHECKS) == 12
        assert set(verify.CHECKS) == {
            "brenner-filter",
            "cusp-236",
            "cusp-244",
            "dihedral-order",
            "heckoid-classification",
            "homology-cases",
            "isometry-groups",
            "no-floats",
            "normalizer-soundness",
            "theta-isom",
            "triangle-images",
            "triangle-orders",
        }

    def test_criteria_covered(self):
        criteria = {crit for crit, _, _ in verify.CHECKS.values()}
        assert criteria == set(range(1, 10))


class TestRunner:
    def test_selector_subset_sorted(self):
        results = verify.run_checks(["cusp-244", "brenner-filter"])
        assert [r.check_id for r in results] == ["brenner-filter", "cusp-244"]
        assert all(r.ok for r in results)
        assert all(r.status == "pass" for r in results)

    def test_unknown_id(self):
        with pytest.raises(ValueError):
            verify.run_checks(["cusp-244", "nope"])

    def test_result_fields(self):
        (res,) = verify.run_checks(["cusp-244"])
        assert res.criterion == 4
        assert res.anchor and "2,4,4" in res.anchor
        assert res.witness["values"] == [4, 8, 16]

    def test_exceptions_become_failures(self, monkeypatch):
        def boom():
            raise RuntimeError("synthetic failure")

        monkeypatch.setitem(
            verify.CHECKS, "synthetic", (1, "synthetic check", boom)
        )
        (res,) = verify.run_checks(["synthetic"])
        assert not res.ok
        assert res.status == "fail"
        assert "synthetic failure" in res.witness["error"]
