from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from qcong.qseries import QSeries

settings.register_profile(
    "qcong", deadline=None, suppress_health_check=[HealthCheck.too_slow], derandomize=True
)
settings.load_profile("qcong")

small_ints = st.integers(min_value=-50, max_value=50)
rationals = st.builds(Fraction, small_ints, st.integers(min_value=1, max_value=12))


@st.composite
def series(draw, min_lo=-3, min_hi=3, max_len=25, coeffs=rationals):
    lo = draw(st.integers(min_value=min_lo, max_value=min_hi))
    n = draw(st.integers(min_value=1, max_value=max_len))
    cs = draw(st.lists(coeffs, min_size=n, max_size=n))
    return QSeries.from_coeffs(cs, lo)


@st.composite
def unit_series(draw, max_len=25):
    """Series with a nonzero coefficient at their lowest stored exponent."""
    s = draw(series(max_len=max_len))
    lead = draw(rationals.filter(bool))
    return s + QSeries.monomial(s.min_exp, s.trunc, lead - s[s.min_exp])


# -- one summary line per acceptance criterion ---------------------------------

_criteria: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion number and title")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or rep.when not in ("setup", "call"):
        return
    n, title = mark.args
    if rep.failed or (rep.when == "call"):
        prev = _criteria.get(n, (title, "PASS"))[1]
        status = "FAIL" if rep.failed or prev == "FAIL" else "PASS"
        _criteria[n] = (title, status)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        title, status = _criteria[n]
        terminalreporter.write_line(f"{status}  criterion {n:2d}  {title}")
