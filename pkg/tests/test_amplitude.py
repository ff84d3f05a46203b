import cmath

import pytest
from hypothesis import given, strategies as st

from models.gate_library import gate_constants, phase, rx, rz
from models.amplitude import (
    INV_SQRT2,
    MINUS_ONE,
    ONE,
    SQRT2,
    ZERO,
    I,
    AlgebraicComplex,
    format_amplitude,
    omega_n,
    parse_amplitude,
    to_float,
)
from models.errors import AmplitudeLiteralError

values = st.builds(
    AlgebraicComplex,
    st.tuples(*[st.integers(-3, 3)] * 8),
    st.integers(0, 3),
)


def close(x: complex, y: complex) -> bool:
    return abs(x - y) < 1e-9


@given(values, values, values)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a
    assert a * ONE == a
    assert a - a == ZERO


@given(values, values)
def test_to_float_is_a_homomorphism(a, b):
    assert close(to_float(a + b), to_float(a) + to_float(b))
    assert close(to_float(a * b), to_float(a) * to_float(b))
    assert close(to_float(a.conjugate()), to_float(a).conjugate())


@given(values)
def test_equal_values_hash_equal(a):
    scaled = AlgebraicComplex(a.coeffs, a.sqrt2_exp) * SQRT2 * INV_SQRT2
    assert scaled == a
    assert hash(scaled) == hash(a)


@given(values)
def test_format_parses_back(a):
    assert parse_amplitude(format_amplitude(a)) == a


def test_sqrt2_factors_cancel():
    assert INV_SQRT2 * INV_SQRT2 * 2 == ONE
    assert INV_SQRT2 * SQRT2 == ONE
    assert I * I == MINUS_ONE
    assert AlgebraicComplex.omega(16) == ONE
    assert AlgebraicComplex.omega(8) == MINUS_ONE


def test_omega_is_a_sixteenth_root_of_unity():
    assert close(to_float(AlgebraicComplex.omega(1)), cmath.exp(1j * cmath.pi / 8))
    assert omega_n(4) == I
    assert omega_n(2) == MINUS_ONE
    assert omega_n(16, 3) == AlgebraicComplex.omega(3)


@pytest.mark.parametrize("roots", [0, 3, 5, 32])
def test_unrepresentable_roots_of_unity(roots):
    with pytest.raises(AmplitudeLiteralError):
        omega_n(roots)


@pytest.mark.parametrize("text, expected", [
    ("0", ZERO),
    ("1", ONE),
    ("-1", MINUS_ONE),
    ("1/s2", INV_SQRT2),
    ("-1/s2", -INV_SQRT2),
    ("i", I),
    ("-i", -I),
    ("w^4", I),
    ("w^-2", AlgebraicComplex.omega(-2)),
    ("C(1,0,0,0,0,0,0,0)/s2^2", AlgebraicComplex.from_int(1) * INV_SQRT2 * INV_SQRT2),
])
def test_parse_literals(text, expected):
    assert parse_amplitude(text) == expected


@pytest.mark.parametrize("value, text", [
    (ZERO, "0"),
    (ONE, "1"),
    (-I, "-i"),
    (INV_SQRT2, "1/s2"),
    (AlgebraicComplex.omega(2), "w^2"),
    (AlgebraicComplex.omega(-2), "w^14"),
])
def test_format_literals(value, text):
    assert format_amplitude(value) == text


@pytest.mark.parametrize("text", ["", "1/s3", "C(1,2)", "w^", "x"])
def test_invalid_literals(text):
    with pytest.raises(AmplitudeLiteralError):
        parse_amplitude(text)


def test_negative_sqrt2_exponent_rejected():
    with pytest.raises(AmplitudeLiteralError):
        AlgebraicComplex((1, 0, 0, 0, 0, 0, 0, 0), -1)


@pytest.mark.parametrize("name", sorted(gate_constants()))
def test_named_gates_are_unitary(name):
    assert gate_constants()[name].is_unitary()


@pytest.mark.parametrize("n", range(-8, 9))
def test_rotations_are_unitary(n):
    assert rx(n).is_unitary()
    assert rz(n).is_unitary()
    assert phase(n).is_unitary()


def test_rotation_values():
    assert close(to_float(rx(2).u1), cmath.cos(cmath.pi / 4))
    assert close(to_float(rx(2).u2), -1j * cmath.sin(cmath.pi / 4))
    assert rz(4).u1 == AlgebraicComplex.omega(-4)
    assert rz(4).u4 == I
