import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from delcode import Modulus, ModPolynomial, locator_roots, next_prime_above, power_sums_to_elementary
from delcode.modular import is_prime, locator_polynomial


def trial_division(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


class TestPrimes:
    def test_is_prime_matches_trial_division_small(self):
        for n in range(2000):
            assert is_prime(n) == trial_division(n), n

    def test_is_prime_matches_trial_division_sampled(self):
        rng = random.Random(0)
        for _ in range(200):
            n = rng.randrange(2, 10**6)
            assert is_prime(n) == trial_division(n), n

    def test_modulus_rejects_composites(self):
        for bad in (0, 1, 4, 9, 561):
            with pytest.raises(ValueError):
                Modulus(bad)

    def test_next_prime_above_examples(self):
        assert next_prime_above(2).p == 3
        assert next_prime_above(10).p == 11
        assert next_prime_above(8).p == 11
        assert next_prime_above(8).p <= 16

    def test_next_prime_above_minimal_exhaustive(self):
        for q in range(2, 200):
            p = next_prime_above(q).p
            assert p > q
            assert trial_division(p)
            assert not any(trial_division(m) for m in range(q + 1, p))

    def test_bertrand_bound_sampled(self):
        rng = random.Random(1)
        qs = list(range(2, 1000)) + [rng.randrange(10**3, 10**6) for _ in range(50)]
        for q in qs:
            p = next_prime_above(q).p
            assert q < p <= 2 * q

    def test_rejects_tiny_q(self):
        with pytest.raises(ValueError):
            next_prime_above(1)


class TestModPolynomial:
    def test_evaluate_matches_naive(self):
        m = Modulus(13)
        poly = ModPolynomial((3, 0, 7, 1), m)  # 3X^3 + 7X + 1
        for x in range(13):
            naive = (3 * x**3 + 7 * x + 1) % 13
            assert poly.evaluate(x) == naive

    def test_leading_zeros_stripped(self):
        m = Modulus(5)
        assert ModPolynomial((0, 0, 2, 1), m).coefficients == (2, 1)
        assert ModPolynomial((0,), m).coefficients == (0,)
        assert ModPolynomial((10, 3), m).coefficients == (3,)  # 10 = 0 mod 5

    def test_degree(self):
        m = Modulus(5)
        assert ModPolynomial((1, 0, 0), m).degree == 2


class TestNewtonIdentities:
    def test_single_power_sum_is_identity(self):
        m = Modulus(11)
        for r in range(11):
            assert power_sums_to_elementary((r,), m) == (r,)

    def test_two_roots_mod_seven(self):
        # roots {2, 3}: e1 = 5, e2 = 6
        assert power_sums_to_elementary((5, 6), Modulus(7)) == (5, 6)

    def test_three_roots_mod_eleven(self):
        # roots {1, 2, 4}: power sums (7, 21, 73) = (7, 10, 7) mod 11
        assert power_sums_to_elementary((7, 10, 7), Modulus(11)) == (7, 3, 8)

    def test_too_many_terms_rejected(self):
        with pytest.raises(ValueError):
            power_sums_to_elementary((1, 2, 3), Modulus(3))


class TestLocatorRoots:
    def test_quadratic_example(self):
        assert locator_roots((5, 6), range(1, 7), Modulus(7)) == {2, 3}

    def test_linear_locator(self):
        assert locator_roots((4,), {4}, Modulus(7)) == {4}

    def test_roots_absent_from_candidates(self):
        assert locator_roots((5, 6), {1, 4, 5}, Modulus(7)) == set()

    def test_locator_polynomial_signs(self):
        # (X - 2)(X - 3) = X^2 - 5X + 6
        poly = locator_polynomial((5, 6), Modulus(7))
        assert poly.coefficients == (1, 2, 6)  # -5 = 2 mod 7


def roundtrip(q: int, deleted: tuple[int, ...]) -> set[int]:
    m = next_prime_above(q)
    e = len(deleted)
    sums = tuple(sum(pow(i, k, m.p) for i in deleted) % m.p for k in range(1, e + 1))
    return locator_roots(power_sums_to_elementary(sums, m), range(1, q + 1), m)


class TestRoundTrip:
    def test_exhaustive_small(self):
        # every subset of [1, q] with at most 4 elements comes back intact
        for q in range(2, 13):
            for e in range(1, min(q, 4) + 1):
                for deleted in itertools.combinations(range(1, q + 1), e):
                    assert roundtrip(q, deleted) == set(deleted), (q, deleted)

    @given(st.data())
    def test_random_larger(self, data):
        q = data.draw(st.integers(13, 40))
        e = data.draw(st.integers(1, 4))
        deleted = tuple(data.draw(st.sets(st.integers(1, q), min_size=e, max_size=e)))
        assert roundtrip(q, deleted) == set(deleted)
