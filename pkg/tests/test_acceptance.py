"""Acceptance suite: one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py`` (lines appear in the terminal
summary) or ``python3 tests/test_acceptance.py`` (lines on stdout).
"""
import sys
import time
from functools import lru_cache

import pytest

from clrecover.checks import CheckResult, run_check
from clrecover.groebner import clear_cache

# criterion -> (examples, wall-clock bound in seconds on one core)
CRITERIA = {
    "1": (("sign-table-3-5",), 1),
    "2": (("incidence-2-4-3",), 5),
    "3": (("quintic",), 60),
    "4": (("quintic",), 120),
    "5": (("gr24-tangent-curve",), 600),
    "6": (("hirzebruch",), 300),
    "7": (("quadric-rulings",), 60),
    "8": (("cubic-surface-tensor",), 120),
    "9": (("predicted-components",), 1),
    "10": (("omega1-cubed",), 600),
    "11": (("properties",), 600),
    "positroid": (("positroid-n5",), 60),
}

# reference values that do not hold verbatim; each has a corrected sibling record
LITERAL_UNATTAINABLE = {
    "quintic Chow form, reference coordinates",
    "quintic residual W : I(V)^inf equals the reference degree-16 ideal",
}

SEED = 0


@lru_cache(maxsize=None)
def _run(example: str) -> tuple:
    clear_cache()
    start = time.perf_counter()
    records = run_check(example, seed=SEED)
    return tuple(records), time.perf_counter() - start


def _criterion(crit: str) -> tuple[list[CheckResult], float]:
    examples, _ = CRITERIA[crit]
    records, seconds = [], 0.0
    for ex in examples:
        recs, secs = _run(ex)
        mine = [r for r in recs if r.criterion == crit]
        records += mine
        seconds += secs
    return records, seconds


def summary_line(crit: str) -> tuple[bool, str]:
    records, seconds = _criterion(crit)
    bound = CRITERIA[crit][1]
    required = [r for r in records if r.name not in LITERAL_UNATTAINABLE]
    ok = bool(required) and all(r.passed for r in required) and seconds <= bound
    parts = [f"{'PASS' if r.passed else 'FAIL'} {r.name}"
             + (" (literal, known not to hold)" if r.name in LITERAL_UNATTAINABLE else "") for r in records]
    tag = "PASS" if ok else "FAIL"
    return ok, f"{tag} [{crit}] {'; '.join(parts)} ({seconds:.1f} s, bound {bound} s)"


@pytest.fixture(scope="module")
def lines():
    from conftest import ACCEPTANCE_LINES
    return ACCEPTANCE_LINES


@pytest.mark.parametrize("crit", list(CRITERIA))
def test_criterion(crit, lines):
    ok, line = summary_line(crit)
    lines[crit] = line
    print(line)
    records, seconds = _criterion(crit)
    assert records, f"no records for criterion {crit}"
    for r in records:
        if r.name not in LITERAL_UNATTAINABLE:
            assert r.passed, f"{r.name}: {r.detail}"
    assert seconds <= CRITERIA[crit][1]


@pytest.mark.parametrize("name", sorted(LITERAL_UNATTAINABLE))
@pytest.mark.xfail(strict=True, reason="reference value does not hold verbatim; see corrected record")
def test_literal_record(name):
    records, _ = _run("quintic")
    (rec,) = [r for r in records if r.name == name]
    print(rec.line())
    assert rec.passed, rec.detail


def test_property_suites_use_100_instances():
    records, _ = _criterion("11")
    sized = [r for r in records if "instances" in r.detail]
    assert len(sized) == 6
    assert all(r.detail["instances"] == 100 for r in sized)


def test_sampled_recovery_uses_20_points_per_component():
    (rec,) = _criterion("10")[0]
    # 3 lines through H_i∩H_j and 3 families of lines inside H_i
    assert rec.detail["samples"] == 20 * 6


if __name__ == "__main__":
    results = [summary_line(c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
