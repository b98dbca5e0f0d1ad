import random

import pytest
from hypothesis import given, strategies as st

from dyckstat import bijections as bj
from dyckstat.errors import DyckError, InvariantError
from dyckstat.formulas import count
from dyckstat.stats import MarkedPath, Statistic, SymmetryClass, mark_at, marked_family
from dyckstat.verify import BijectionCase, check_bijection

PEAK, VALLEY = Statistic.PEAK, Statistic.VALLEY

FIG2_Q = "ud" + "uuuduu" + "d" + "ud" + "u" + "duuddddudd" + "uudd"
FIG2_PAIR = ("ud" + "duuddddudd" + "ud" + "uuuduu", "uudd")
FIG3_Q = "uduuud" + "uud" + "u" + "ud" + "d" + "udud" + "d" + "d" + "udduudd"
FIG3_PAIR = ("udduuddduduuud", "uududuud")
FIG4_Q = "uduuudu" + "u" + "ud" + "u" + "dduu" + "d" + "d" + "ud" + "d" + "dduudd"
FIG4_PAIR = ("dduuddduduuudu", "uduuud")


def pair(a, b):
    return bj.PathPair(a, b)


# -- worked examples ---------------------------------------------------------


def test_phi_figure():
    m = mark_at(FIG2_Q, PEAK, 10)
    assert bj.phi(m) == pair(*FIG2_PAIR)
    assert bj.phi_inv(pair(*FIG2_PAIR)) == m


def test_phi_prime_figure():
    m = mark_at(FIG3_Q, PEAK, 8)
    assert bj.phi_prime(m) == pair(*FIG3_PAIR)
    assert bj.phi_prime_inv(pair(*FIG3_PAIR)) == m


def test_theta_figure():
    m = mark_at(FIG4_Q, VALLEY, 13)
    assert m.record.weight == 2 and m.record.cls is SymmetryClass.SYMMETRIC
    assert bj.theta(m) == pair(*FIG4_PAIR)
    assert bj.theta_inv(pair(*FIG4_PAIR)) == m


def test_minimal_cases():
    assert bj.phi(mark_at("ud", PEAK, 1)) == pair("", "")
    assert bj.phi_inv(pair("", "udud")) == mark_at("ududud", PEAK, 1)
    (only,) = marked_family("L", 0, 0)
    assert only.path.steps == "uududd"
    assert bj.phi_prime(only) == pair("", "uu")
    assert bj.phi_prime_inv(pair("", "uu")) == only
    (v,) = marked_family("V", 0, 0)
    assert bj.theta(v) == pair("", "")
    (v21,) = marked_family("V", 2, 1)
    assert bj.eta(only) == v21
    (vl,) = marked_family("V_L", 0, 0)
    assert bj.valley_shift(v21) == vl


def test_pyramid_examples():
    assert bj.pyramid_lift(MarkedPath("ud", PEAK, 0), 1) == MarkedPath("uudd", PEAK, 0)
    assert bj.pyramid_drop(MarkedPath("uudd", PEAK, 0), 1) == MarkedPath("ud", PEAK, 0)
    # left asymmetric u^3 d^2 grows to u^5 d^4
    lifted = bj.pyramid_lift(MarkedPath("uuuddudd", PEAK, 0), 2)
    assert lifted == MarkedPath("uuuuuddddudd", PEAK, 0)
    assert lifted.record.cls is SymmetryClass.LEFT and lifted.record.weight == 4


def test_pyramid_weight_grows():
    for m in marked_family("S_STAR", 4, 1):
        for j in (1, 2, 3):
            lifted = bj.pyramid_lift(m, j)
            assert lifted.record.weight == m.record.weight + j
            assert lifted.record.cls is m.record.cls
            assert len(lifted.path) == len(m.path) + 2 * j


# -- rejected input ----------------------------------------------------------


def test_pyramid_errors():
    m = MarkedPath("uudd", PEAK, 0)
    with pytest.raises(DyckError):
        bj.pyramid_lift(m, 0)
    with pytest.raises(DyckError):
        bj.pyramid_drop(m, -1)
    with pytest.raises(InvariantError):
        bj.pyramid_drop(m, 2)
    with pytest.raises(InvariantError):
        bj.pyramid_lift(MarkedPath("udud", VALLEY, 0), 1)


def test_right_peak_rejected():
    m = MarkedPath("uuuddudd", PEAK, 1)  # u d d after the first mountain
    assert m.record.cls is SymmetryClass.RIGHT
    with pytest.raises(InvariantError):
        bj.pyramid_lift(m, 1)
    with pytest.raises(InvariantError):
        bj.pyramid_drop(m, 1)


@pytest.mark.parametrize("fn, m", [
    (bj.phi, MarkedPath("uudd", PEAK, 0)),
    (bj.phi_prime, MarkedPath("udud", PEAK, 0)),
    (bj.theta, MarkedPath("uudduudd", PEAK, 0)),
    (bj.rho, MarkedPath("udud", VALLEY, 0)),
    (bj.eta, MarkedPath("uuddudud", PEAK, 0)),
    (bj.valley_shift, MarkedPath("udud", VALLEY, 0)),
])
def test_forward_rejects_wrong_marks(fn, m):
    with pytest.raises(InvariantError):
        fn(m)


def test_inverse_rejects_bad_pairs():
    with pytest.raises(InvariantError):
        bj.phi_inv(pair("du", ""))       # first must start with ud
    with pytest.raises(InvariantError):
        bj.phi_inv(pair("", "u"))        # phi needs k = 0
    with pytest.raises(InvariantError):
        bj.theta_inv(pair("", "u"))      # odd end level
    with pytest.raises(InvariantError):
        bj.phi_prime_inv(pair("", "d"))  # second is not partial
    with pytest.raises(InvariantError):
        bj.rho_inv(pair("ud", ""))       # rho needs end level >= 2


def test_pair_membership():
    assert bj.in_F(pair("uddu", "u"), 3, 1)
    assert not bj.in_F(pair("duud", "u"), 3, 1)
    assert bj.in_E(pair("duud", "u"), 3, 1)
    assert not bj.in_E(pair("duud", "u"), 2, 1)
    assert len(list(bj.enumerate_F(4, 0))) == 49
    assert len(list(bj.enumerate_E(5, 2))) == 84


# -- exhaustive and random round trips ----------------------------------------


@pytest.mark.parametrize("n,k", [(n, k) for n in range(6) for k in range(n + 1)])
def test_pair_set_sizes(n, k):
    assert len(set(bj.enumerate_F(n, k))) == count("F", n, k)
    assert len(set(bj.enumerate_E(n, k))) == count("E", n, k)


@pytest.mark.parametrize("name, f, finv, dom, cod", [
    ("pyramid S(5,1)", lambda m: bj.pyramid_lift(m, 1), lambda m: bj.pyramid_drop(m, 1),
     lambda: marked_family("S", 5, 1), lambda: marked_family("S", 6, 2)),
    ("phi S(4,0)", bj.phi, bj.phi_inv, lambda: marked_family("S", 4, 0), lambda: bj.enumerate_F(4, 0)),
    ("phi_prime L(1,0)", bj.phi_prime, bj.phi_prime_inv,
     lambda: marked_family("L", 1, 0), lambda: bj.enumerate_E(3, 2)),
    ("theta V(3,1)", bj.theta, bj.theta_inv, lambda: marked_family("V", 3, 1), lambda: bj.enumerate_E(3, 2)),
    ("rho VL(3,0)", bj.rho, bj.rho_inv, lambda: marked_family("V_L", 3, 0), lambda: bj.enumerate_E(5, 2)),
    ("eta L(2,0)", bj.eta, bj.eta_inv, lambda: marked_family("L", 2, 0), lambda: marked_family("V", 4, 1)),
    ("valley_shift V(5,1)", bj.valley_shift, bj.valley_shift_inv,
     lambda: marked_family("V", 5, 1), lambda: marked_family("V_L", 3, 0)),
])
def test_named_round_trips(name, f, finv, dom, cod):
    check = check_bijection(BijectionCase(name, f, finv, dom, cod, 0))
    assert check.passed, check


def test_check_bijection_reports_counterexample():
    # the identity is not a bijection S(3,0) -> S(4,0)
    check = check_bijection(BijectionCase(
        "broken", lambda m: m, lambda m: m,
        lambda: marked_family("S", 3, 0), lambda: marked_family("S", 4, 0), 0,
    ))
    assert not check.passed and check.counterexample


@st.composite
def dyck(draw, half):
    n = draw(st.integers(0, half))
    rng = random.Random(draw(st.integers(0, 2**32)))
    # uniform-ish random Dyck word by rejection on shuffled steps
    while True:
        steps = ["u"] * n + ["d"] * n
        rng.shuffle(steps)
        w, h = "".join(steps), 0
        if all((h := h + (1 if c == "u" else -1)) >= 0 for c in w):
            return w


@given(dyck(9), st.data())
def test_random_marked_round_trips(w, data):
    from dyckstat.stats import scan_peaks, scan_valleys
    for i, r in enumerate(scan_peaks(w)):
        m = MarkedPath(w, PEAK, i)
        if r.cls is SymmetryClass.SYMMETRIC and r.weight == 1:
            assert bj.phi_inv(bj.phi(m)) == m
        if r.cls is SymmetryClass.LEFT and r.weight == 1:
            assert bj.phi_prime_inv(bj.phi_prime(m)) == m
            assert bj.eta_inv(bj.eta(m)) == m
        if r.cls is not SymmetryClass.RIGHT:
            j = data.draw(st.integers(1, 3))
            assert bj.pyramid_drop(bj.pyramid_lift(m, j), j) == m
    for i, r in enumerate(scan_valleys(w)):
        m = MarkedPath(w, VALLEY, i)
        if r.cls is SymmetryClass.SYMMETRIC:
            assert bj.theta_inv(bj.theta(m)) == m
            if r.weight >= 2:
                assert bj.valley_shift_inv(bj.valley_shift(m)) == m
        if r.cls is SymmetryClass.LEFT:
            assert bj.rho_inv(bj.rho(m)) == m


@given(st.text(alphabet="ud", max_size=10).filter(lambda w: w.count("u") == w.count("d")),
       st.integers(0, 3), st.integers(0, 6), st.data())
def test_random_pair_round_trips(free, k, extra, data):
    # random partial path ending at level 2k
    end = 2 * k
    steps, h = [], 0
    for _ in range(extra):
        c = data.draw(st.sampled_from("ud")) if h > 0 else "u"
        steps.append(c)
        h += 1 if c == "u" else -1
    tail = "u" * (end - h) if h <= end else "d" * (h - end)
    second = "".join(steps) + tail
    p = pair(free, second)
    assert bj.theta(bj.theta_inv(p)) == p
    if k >= 1:
        assert bj.rho(bj.rho_inv(p)) == p
    if k == 1:
        assert bj.phi_prime(bj.phi_prime_inv(p)) == p
