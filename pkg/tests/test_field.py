"""Field backends: valuation, exact arithmetic, canonical forms, text."""

import pytest

from ultraconv.field import Field, FieldElement, ParseError, Valuation


# ---------------------------------------------------------------------------
# selectors

def test_selector_roundtrip():
    for sel in ("padic:2", "padic:5", "padic:97", "ratfunc:0", "ratfunc:2", "ratfunc:7"):
        f = Field.from_selector(sel)
        assert f.selector == sel
        assert Field.from_selector(f.selector) == f


def test_selector_rejects_bad_input():
    for sel in ("padic:4", "padic:1", "padic:-3", "ratfunc:4", "ratfunc:-1",
                "ratfunc:1", "foo:2", "padic", "padic:", "padic:2:3"):
        with pytest.raises((ValueError, ParseError)):
            Field.from_selector(sel)


# ---------------------------------------------------------------------------
# valuation values, frozen

def test_padic_valuation_frozen():
    f5 = Field.padic(5)
    assert f5.parse("50/3").val() == 2
    assert f5.parse("3/50").val() == -2
    assert f5.parse("7").val() == 0
    assert f5.parse("0").val().is_infinite

    f2 = Field.padic(2)
    assert f2.parse("7/8").val() == -3
    assert f2.parse("12").val() == 2
    assert f2.parse("-1/2").val() == -1


def test_ratfunc_valuation_frozen():
    r0 = Field.ratfunc(0)
    assert r0.parse("t").val() == 1
    assert r0.parse("(t^2 + 1)/(t^3)").val() == -3
    assert r0.parse("(t^3)/(t + 1)").val() == 3
    assert r0.parse("5").val() == 0
    assert r0.parse("0").val().is_infinite

    r2 = Field.ratfunc(2)
    assert r2.parse("t^2 + t").val() == 1
    # 2 = 0 in characteristic 2
    assert r2.parse("2*t + 1").val() == 0
    assert r2.parse("2").val().is_infinite


def test_valuation_ordering_and_arithmetic():
    inf = Valuation()
    assert inf.is_infinite
    assert inf > 10**9
    three = Valuation(3)
    assert three == 3 and three < inf
    assert (three + 4) == 7
    assert (inf + 5).is_infinite


# ---------------------------------------------------------------------------
# arithmetic laws on fixed elements

FIXED = {
    "padic:2": ["0", "1", "-1", "7/8", "-3/4", "5", "1/3", "6", "1/2"],
    "padic:5": ["0", "1", "50/3", "-1/5", "2/7", "125", "3/25"],
    "ratfunc:0": ["0", "1", "t", "(t^2 + 1)/(t^3)", "(2*t + 6)/(3)", "(1)/(t + 1)"],
    "ratfunc:2": ["0", "1", "t", "(t^2 + t + 1)/(t)", "(t + 1)/(t^2 + 1)"],
}


@pytest.mark.parametrize("sel", sorted(FIXED))
def test_ring_identities(sel):
    f = Field.from_selector(sel)
    xs = [f.parse(s) for s in FIXED[sel]]
    for x in xs:
        for y in xs:
            assert x + y == y + x
            assert x * y == y * x
            assert (x - y) + y == x
            assert x * (x + y) == x * x + x * y
            if not y.is_zero:
                assert (x / y) * y == x
        assert x + f.zero == x
        assert x * f.one == x
        assert (x - x).is_zero


@pytest.mark.parametrize("sel", sorted(FIXED))
def test_valuation_laws_on_fixed_elements(sel):
    f = Field.from_selector(sel)
    xs = [f.parse(s) for s in FIXED[sel]]
    for x in xs:
        for y in xs:
            if x.is_zero or y.is_zero:
                continue
            assert (x * y).val() == x.val() + y.val()
            s = x + y
            lo = min(x.val(), y.val())
            if not s.is_zero:
                assert s.val() >= lo
            if x.val() != y.val():
                assert s.val() == lo


def test_division_by_zero_raises():
    f = Field.padic(3)
    with pytest.raises(ZeroDivisionError):
        f.one / f.zero
    r = Field.ratfunc(0)
    with pytest.raises(ZeroDivisionError):
        r.one / r.zero


# ---------------------------------------------------------------------------
# canonical forms and text

def test_parse_render_roundtrip_frozen():
    f2 = Field.padic(2)
    for s in ("0", "1", "-1", "7/8", "-3/4", "1/3"):
        assert f2.parse(s).render() == s
    r0 = Field.ratfunc(0)
    for s in ("0", "1", "t", "t^2+1", "(t^2+1)/(t^3)"):
        assert r0.parse(s).render() == s
        assert r0.parse(r0.parse(s).render()) == r0.parse(s)


def test_ratfunc_canonical_monic_denominator():
    r0 = Field.ratfunc(0)
    # 2t / (4t + 4) must reduce and leave the denominator monic
    x = r0.ratio([0, 2], [4, 4])
    num, den = x.data
    assert den[-1] == 1
    assert x == r0.ratio([0, 1], [2, 2])
    assert x.render() == r0.parse(x.render()).render()


def test_ratfunc_cancellation_is_exact():
    r0 = Field.ratfunc(0)
    t = r0.parse("t")
    a = (t + r0.one) * (t - r0.one)
    b = t * t - r0.one
    assert a == b
    # (t^2 - 1)/(t - 1) collapses to t + 1
    assert b / (t - r0.one) == t + r0.one


def test_canonical_survives_arithmetic_detours():
    f2 = Field.padic(2)
    x = f2.parse("7/24")
    seven = f2.from_int(7)
    assert (x * seven) / seven == x
    r5 = Field.ratfunc(5)
    y = r5.parse("(t^2 + 3)/(t^3 + 2*t^4)")
    shift = r5.parse("t + 1")
    assert (y * shift) / shift == y


def test_integral_and_fractional_parts():
    f2 = Field.padic(2)
    x = f2.parse("7/24")
    assert x.integral_part().render() == "-1/3"
    assert x.fractional_part().render() == "5/8"
    assert x.integral_part() + x.fractional_part() == x
    assert x.integral_part().val() >= 0

    r0 = Field.ratfunc(0)
    y = r0.parse("(t^4+t+3)/(t^2)")
    assert y.integral_part().render() == "t^2"
    assert y.fractional_part().render() == "(t+3)/(t^2)"
    assert y.integral_part() + y.fractional_part() == y


def test_uniformizer_powers():
    f5 = Field.padic(5)
    assert f5.uniformizer().val() == 1
    assert f5.uniformizer_pow(-2).val() == -2
    assert f5.uniformizer_pow(3) * f5.uniformizer_pow(-3) == f5.one
    r3 = Field.ratfunc(3)
    assert r3.uniformizer_pow(4).val() == 4


def test_parse_errors():
    f2 = Field.padic(2)
    for bad in ("", "1/0", "one", "1//2", "--3"):
        with pytest.raises(ParseError):
            f2.parse(bad)
    r0 = Field.ratfunc(0)
    for bad in ("", "(t)/(0)", "t^", "t^-1", "(t"):
        with pytest.raises(ParseError):
            r0.parse(bad)


def test_elements_are_hashable_and_field_bound():
    f2, f3 = Field.padic(2), Field.padic(3)
    a = f2.from_int(6)
    b = f3.from_int(6)
    assert a != b
    assert len({a, f2.from_int(6), b}) == 2
    with pytest.raises(ValueError):
        a + b


# ---------------------------------------------------------------------------
# randomized law checks via the verify suite

@pytest.mark.parametrize("sel,trials", [
    ("padic:2", 40), ("padic:7", 25), ("ratfunc:0", 25), ("ratfunc:3", 25),
])
def test_field_property_suite(sel, trials):
    from ultraconv.verify import run_suite
    results = run_suite("field", Field.from_selector(sel), seed=20260822, trials=trials)
    for r in results:
        assert r.ok, f"{r.name}: {r.failures}"
