"""Acceptance suite: every criterion runs exactly as pinned in
lampk.selfcheck, printing one pass/fail line, and must finish inside its
time budget."""

import pytest

from lampk import selfcheck


@pytest.mark.parametrize(
    "criterion",
    selfcheck.CRITERIA,
    ids=[f"criterion-{c.cid}-{c.name}" for c in selfcheck.CRITERIA],
)
def test_criterion(criterion):
    result = selfcheck.run_criterion(criterion)
    label = "PASS" if result.status == "pass" else "FAIL"
    print(
        f"{label} criterion {result.cid} ({result.name}): {result.detail} "
        f"[{result.elapsed_s:.2f}s / budget {criterion.budget_s:.0f}s]"
    )
    assert result.status == "pass", result.detail
    assert result.elapsed_s < criterion.budget_s, (
        f"criterion {result.cid} took {result.elapsed_s:.2f}s, "
        f"budget {criterion.budget_s}s"
    )
