import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zoli.errors import (
    INT64_MAX,
    INT64_MIN,
    BlackHoleOperand,
    DivisionByZero,
    IndeterminateOperand,
    NegativeExponent,
    NoUniverse,
    Overflow,
    StrictResolutionError,
    UndefinedPower,
    UnknownLabel,
    ZoliError,
)
from zoli.interp import (
    BlackHolePolicy,
    EvalConfig,
    Session,
    eval_expr,
    format_result,
    run_program,
)
from zoli.syntax import parse_source
from zoli.universe import Cell, Chase, Numeral, Opaque, Universe

FRESH = Universe.from_range(0, 9)


def expr_of(src: str):
    return parse_source("{ writeln(" + src + ") }").statements[0].expr


def value_of(src: str, universe=FRESH, config=EvalConfig()):
    return eval_expr(expr_of(src), universe, config)


def run_text(src: str, config=EvalConfig()):
    return run_program(parse_source(src), config)


def test_plain_arithmetic():
    assert value_of("5 + 9") == (14,)
    assert value_of("2 * 3 + 4") == (10,)
    assert value_of("2 + 3 * 4") == (14,)
    assert value_of("(2 + 3) * 4") == (20,)
    assert value_of("2^10") == (1024,)
    assert value_of("-2^2") == (-4,)
    assert value_of("(0 - 2)^2") == (4,)
    assert value_of("7^0") == (1,)
    assert value_of("0^5") == (0,)


def test_division_truncates_toward_zero():
    assert value_of("7 / 2") == (3,)
    assert value_of("(0 - 7) / 2") == (-3,)
    assert value_of("7 / (0 - 2)") == (-3,)
    assert value_of("(0 - 7) / (0 - 2)") == (3,)


def test_literals_resolve_but_results_do_not():
    u = FRESH.rebind(5, 9)
    # the literal 5 becomes 9, but the computed 2+3 is taken at face value
    assert value_of("5", u) == (9,)
    assert value_of("2 + 3", u) == (5,)


def test_rebind_changes_evaluation():
    out = run_text("{ ZoT = (0?9); 3 := 7; writeln(5 + 9); writeln(3 + 6) }")
    assert out.lines == ("14", "13")
    assert out.text == "14\n13\n"


def test_second_init_replaces_the_universe():
    out = run_text("{ ZoT = (0?9); 3 := 7; ZoT = (0?9); writeln(3) }")
    assert out.lines == ("3",)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        run_text("{ ZoT = (0?9); writeln(6 / 0) }")


def test_undefined_power():
    with pytest.raises(UndefinedPower):
        run_text("{ ZoT = (0?9); writeln(0^0) }")


def test_negative_exponent():
    with pytest.raises(NegativeExponent):
        value_of("2^-3")


def test_zero_divisor_only_after_resolution():
    u = FRESH.rebind(4, 0)
    with pytest.raises(DivisionByZero):
        value_of("8 / 4", u)
    u2 = FRESH.rebind(0, 2)
    assert value_of("8 / 0", u2) == (4,)


def test_overflow_paths():
    assert value_of(str(INT64_MAX)) == (INT64_MAX,)
    with pytest.raises(Overflow):
        value_of(str(INT64_MAX + 1))
    with pytest.raises(Overflow):
        value_of(f"{INT64_MAX} + 1")
    with pytest.raises(Overflow):
        value_of(f"0 - {INT64_MAX} - 2")
    with pytest.raises(Overflow):
        value_of("2^63")
    assert value_of("2^62") == (2**62,)
    with pytest.raises(Overflow):
        value_of("10^200")
    with pytest.raises(Overflow):
        value_of(f"(0 - {INT64_MAX} - 1) / (0 - 1)")
    with pytest.raises(Overflow):
        value_of(f"0 - (0 - {INT64_MAX} - 1)")
    assert value_of(f"(0 - {INT64_MAX} - 1) + 0") == (INT64_MIN,)


def test_one_and_zero_powers_stay_cheap():
    # exponents far past the budget are fine for bases -1, 0 and 1
    assert value_of(f"1^{INT64_MAX}") == (1,)
    assert value_of(f"0^{INT64_MAX}") == (0,)
    assert value_of(f"(0 - 1)^{INT64_MAX}") == (-1,)
    assert value_of(f"(0 - 1)^{INT64_MAX - 1}") == (1,)


def test_error_carries_location_and_statement_index():
    try:
        run_text("{ ZoT = (0?9)\n  writeln(1)\n  writeln(6 / 0) }")
    except DivisionByZero as err:
        assert err.stmt_index == 3
        assert err.line == 3
        assert err.col == 13
    else:
        pytest.fail("expected DivisionByZero")


def test_strict_rejects_unbound_literals():
    strict = EvalConfig(strict=True)
    assert value_of("9", FRESH, strict) == (9,)
    with pytest.raises(StrictResolutionError):
        value_of("12", FRESH, strict)


def test_strict_exempts_chased_intermediates():
    u = FRESH.rebind(3, 55)
    config = EvalConfig(resolution=Chase(), strict=True)
    # 3 is written, so it must have a cell; the chased 55 need not
    assert value_of("3", u, config) == (55,)
    with pytest.raises(StrictResolutionError):
        value_of("55", u, config)


def test_black_hole_policies():
    u = Universe.from_range(1, 9).stack(3, [18, 13, 15])
    e = expr_of("3 + 1")
    with pytest.raises(BlackHoleOperand):
        eval_expr(e, u, EvalConfig())
    assert eval_expr(e, u, EvalConfig(black_hole=BlackHolePolicy.FIRST)) == (19,)
    assert eval_expr(e, u, EvalConfig(black_hole=BlackHolePolicy.LAST)) == (16,)
    assert eval_expr(e, u, EvalConfig(black_hole=BlackHolePolicy.ALL)) == (14, 16, 19)


def test_each_site_varies_independently():
    u = FRESH.stack(3, [1, 2])
    assert value_of("3 + 3", u, EvalConfig(black_hole=BlackHolePolicy.ALL)) == (2, 3, 4)


def test_enumeration_deduplicates():
    u = FRESH.stack(3, [1, 2]).stack(4, [5, 6])
    # 1+6 and 2+5 collide on 7
    assert value_of("3 + 4", u, EvalConfig(black_hole=BlackHolePolicy.ALL)) == (6, 7, 8)
    assert value_of("3 * 0", u, EvalConfig(black_hole=BlackHolePolicy.ALL)) == (0,)


def test_enumeration_stops_at_the_first_failing_combination():
    u = FRESH.stack(3, [0, 1])
    with pytest.raises(DivisionByZero):
        value_of("6 / 3", u, EvalConfig(black_hole=BlackHolePolicy.ALL))
    with pytest.raises(DivisionByZero):
        value_of("6 / 3", u, EvalConfig(black_hole=BlackHolePolicy.FIRST))
    assert value_of("6 / 3", u, EvalConfig(black_hole=BlackHolePolicy.LAST)) == (6,)


def test_chase_endpoint_feeds_the_policy():
    u = FRESH.rebind(3, 7).stack(7, [1, 2]).rebind(1, 5)
    config = EvalConfig(resolution=Chase(), black_hole=BlackHolePolicy.FIRST)
    # the chase stops at 7's stack; the chosen occupant is not chased again
    assert value_of("3", u, config) == (1,)
    config_all = EvalConfig(resolution=Chase(), black_hole=BlackHolePolicy.ALL)
    assert value_of("3", u, config_all) == (1, 2)


def test_opaque_operand_refuses_arithmetic():
    u = Universe((Cell(3, (Opaque("q"),)), Cell(4, (Numeral(4),))))
    with pytest.raises(IndeterminateOperand):
        value_of("3 + 4", u)
    for policy in BlackHolePolicy:
        with pytest.raises(IndeterminateOperand):
            value_of("3", u, EvalConfig(black_hole=policy))


def test_format_result():
    assert format_result((14,)) == "14"
    assert format_result((14, 16, 19)) == "{14, 16, 19}"
    assert format_result((-3, 0)) == "{-3, 0}"


def test_session_before_init():
    session = Session()
    stmts = parse_source("{ 3 := 7 }").statements
    with pytest.raises(NoUniverse):
        session.execute(stmts[0])
    # without a universe, numerals denote themselves
    out = Session().execute(parse_source("{ writeln(3 + 4) }").statements[0])
    assert out == "7"
    strict_session = Session(EvalConfig(strict=True))
    with pytest.raises(NoUniverse):
        strict_session.execute(parse_source("{ writeln(3) }").statements[0])


def test_binding_errors_surface_with_statement_index():
    try:
        run_text("{ ZoT = (0?9); 12 := 1 }")
    except UnknownLabel as err:
        assert err.stmt_index == 2
    else:
        pytest.fail("expected UnknownLabel")


def test_run_output_final_universe():
    out = run_text("{ ZoT = (0?9); 3 := 7 }")
    assert out.final_universe is not None
    assert out.final_universe.display() == "0 1 2 7 4 5 6 7 8 9"
    assert run_text("{ }").final_universe is None


def test_cycle_error_during_evaluation():
    u = FRESH.rebind(3, 7).rebind(7, 3)
    with pytest.raises(ZoliError) as exc_info:
        value_of("3", u, EvalConfig(resolution=Chase()))
    assert exc_info.value.kind == "CycleDetected"
    assert exc_info.value.line is not None


@settings(max_examples=200)
@given(
    a=st.integers(min_value=-(10**9), max_value=10**9),
    b=st.integers(min_value=-(10**9), max_value=10**9),
)
def test_division_matches_int_truncation(a, b):
    u = Universe()
    if b == 0:
        with pytest.raises(DivisionByZero):
            eval_expr(expr_of(f"({_lit(a)}) / ({_lit(b)})"), u)
    else:
        got = eval_expr(expr_of(f"({_lit(a)}) / ({_lit(b)})"), u)
        want = abs(a) // abs(b)
        if (a < 0) != (b < 0):
            want = -want
        assert got == (want,)


def _lit(n: int) -> str:
    return str(n) if n >= 0 else f"0 - {-n}"


@settings(max_examples=200)
@given(
    values=st.lists(st.integers(min_value=-99, max_value=99), min_size=2, max_size=4)
)
def test_policy_choices_agree_with_the_stack_order(values):
    u = Universe.from_range(0, 9).stack(5, values)
    first = eval_expr(expr_of("5"), u, EvalConfig(black_hole=BlackHolePolicy.FIRST))
    last = eval_expr(expr_of("5"), u, EvalConfig(black_hole=BlackHolePolicy.LAST))
    every = eval_expr(expr_of("5"), u, EvalConfig(black_hole=BlackHolePolicy.ALL))
    assert first == (values[0],)
    assert last == (values[-1],)
    assert every == tuple(sorted(set(values)))


_small_exprs = st.recursive(
    st.integers(min_value=0, max_value=12).map(str),
    lambda inner: st.tuples(inner, st.sampled_from("+-*"), inner).map(
        lambda t: f"({t[0]} {t[1]} {t[2]})"
    ),
    max_leaves=8,
)


@settings(max_examples=150)
@given(
    rebinds=st.dictionaries(
        st.integers(min_value=0, max_value=9),
        st.integers(min_value=-50, max_value=50),
        max_size=5,
    ),
    src=_small_exprs,
)
def test_all_policy_collapses_to_error_without_stacks(rebinds, src):
    u = Universe.from_range(0, 9)
    for label, value in rebinds.items():
        u = u.rebind(label, value)
    expr = expr_of(src)
    plain = eval_expr(expr, u, EvalConfig(black_hole=BlackHolePolicy.ERROR))
    every = eval_expr(expr, u, EvalConfig(black_hole=BlackHolePolicy.ALL))
    assert len(every) == 1
    assert every == plain


def test_identical_runs_produce_identical_output():
    src = "{ ZoT = (0?9); 3 := [18, 13, 15]; writeln(3 + 1); writeln(2 * 3) }"
    config = EvalConfig(black_hole=BlackHolePolicy.ALL)
    first = run_text(src, config)
    second = run_text(src, config)
    assert first.lines == second.lines
    assert first.final_universe == second.final_universe
