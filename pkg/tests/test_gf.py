import numpy as np
import pytest

from ellpairs.errors import EllPairsError, DivisionByZero, FieldMismatch, InvalidExponentIndex, NonPrimeCharacteristic, UnsupportedSize
from ellpairs.gf import GF, Field, canonical_modulus, field_from_json, field_new, field_of_order, prime_power


def test_canonical_moduli():
    assert GF(2, 2).modulus == (1, 1, 1)  # x^2 + x + 1
    assert GF(3, 2).modulus == (1, 0, 1)  # x^2 + 1
    assert canonical_modulus(2, 3) == (1, 0, 1, 1)  # x^3 + x^2 + 1: (1,0,..) sorts before (1,1,..)


def test_field_new_errors():
    with pytest.raises(NonPrimeCharacteristic):
        field_new(4, 1)
    with pytest.raises(UnsupportedSize):
        field_new(2, 0)


def test_prime_power():
    assert prime_power(9) == (3, 2)
    assert prime_power(8) == (2, 3)
    with pytest.raises(EllPairsError):
        prime_power(6)


def test_small_arithmetic():
    F4 = GF(2, 2)
    assert F4.mul(2, 2) == 3
    assert GF(5).inv(2) == 3
    F9 = field_of_order(9)
    for a in F9.elements():
        assert F9.add(a, F9.neg(a)) == 0


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        GF(5).inv(0)
    with pytest.raises(DivisionByZero):
        GF(2, 2).div(1, 0)


def test_frobenius():
    F4 = GF(2, 2)
    assert F4.frobenius(2, 0) == 2
    assert F4.frobenius(2, 1) == 3
    F9 = GF(3, 2)
    for a in F9.elements():
        assert F9.frobenius(F9.frobenius(a, 1), 1) == a
    with pytest.raises(InvalidExponentIndex):
        F9.frobenius(1, 2)


def test_multiplicative_group_is_cyclic_of_order_q_minus_1():
    for q in (4, 8, 9, 16, 25):
        F = field_of_order(q)
        for a in range(1, q):
            assert F.pow(a, q - 1) == 1


def test_vector_ops_match_scalar_ops():
    F = field_of_order(9)
    a = np.arange(9)
    b = (a * 5 + 2) % 9
    assert list(F.vadd(a, b)) == [F.add(x, y) for x, y in zip(a, b)]
    assert list(F.vmul(a, b)) == [F.mul(x, y) for x, y in zip(a, b)]
    assert list(F.vinv(a[1:])) == [F.inv(x) for x in a[1:]]


def test_json_round_trip_and_mismatch():
    F = field_of_order(8)
    assert field_from_json(F.to_json()) == F
    assert field_from_json(8) == F
    assert GF(2, 2) != GF(2)
    assert isinstance(Field(2, 2, modulus=(1, 0, 1)), Field)
    from ellpairs.matrix import Matrix

    with pytest.raises(FieldMismatch):
        Matrix(GF(2), [[1]]) @ Matrix(GF(3), [[1]])
