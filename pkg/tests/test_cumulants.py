from fractions import Fraction
from math import factorial

import pytest

from stratavol.cumulants import (
    StratumSpec,
    WickGroups,
    c_const,
    c_simple,
    elementary_cumulant,
    elementary_cumulant_series_oracle,
    f_cumulant_leading,
    t_poly_forest_oracle,
    volume,
    wick_leading,
)
from stratavol.errors import DomainError, ResourceCapError
from stratavol.exact_arith import PiScalar, frak_z
from stratavol.partitions import IntPartition, enum_set_partitions


def keys_up_to(max_parts, max_size):
    def rec(rem, nparts, max_part):
        if nparts == 0:
            yield ()
            return
        for first in range(min(rem - nparts + 1, max_part), 0, -1):
            for rest in rec(rem - first, nparts - 1, first):
                yield (first,) + rest

    for n in range(1, max_parts + 1):
        for size in range(n, max_size + 1):
            yield from rec(size, n, size)


class TestElementaryCumulant:
    def test_single_one(self):
        assert elementary_cumulant((1,)) == PiScalar(Fraction(1, 6), 2)

    def test_single_two_vanishes(self):
        assert elementary_cumulant((2,)).is_zero()

    def test_pair_22(self):
        assert elementary_cumulant((2, 2)) == PiScalar(Fraction(16, 45), 4)

    def test_pair_42(self):
        assert elementary_cumulant((4, 2)) == PiScalar(Fraction(416, 315), 6)

    def test_one_part_closed_form(self):
        for k in range(1, 9):
            assert elementary_cumulant((k,)) == factorial(k) * frak_z(k + 1)

    def test_two_part_closed_form(self):
        for k in range(1, 7):
            for l in range(1, k + 1):
                want = factorial(k + l) * frak_z(k + l) - (
                    factorial(k) * factorial(l)
                ) * frak_z(k) * frak_z(l)
                assert elementary_cumulant((k, l)) == want

    def test_canonical_ordering(self):
        assert elementary_cumulant((2, 4)) == elementary_cumulant((4, 2))

    def test_pi_homogeneity_and_parity(self):
        for key in keys_up_to(4, 8):
            value = elementary_cumulant(key)
            size, n = sum(key), len(key)
            if (size - n) % 2 == 1:
                assert value.is_zero(), key
            elif not value.is_zero():
                assert value.pi_pow == size - n + 2, key

    def test_empty_rejected(self):
        with pytest.raises(DomainError):
            elementary_cumulant(())

    def test_cap(self):
        with pytest.raises(ResourceCapError):
            elementary_cumulant((1,) * 13)


class TestSeriesOracle:
    def test_agrees_small(self):
        for key in keys_up_to(3, 6):
            assert elementary_cumulant(key) == elementary_cumulant_series_oracle(key), key

    def test_agrees_four_parts(self):
        for key in [(1, 1, 1, 1), (2, 1, 1, 1), (2, 2, 1, 1), (3, 1, 1, 1)]:
            assert elementary_cumulant(key) == elementary_cumulant_series_oracle(key)

    def test_cap(self):
        with pytest.raises(ResourceCapError):
            elementary_cumulant_series_oracle((1,) * 5)


class TestForestOracle:
    def test_all_partitions_up_to_4(self):
        for n in range(1, 5):
            for rho in enum_set_partitions(n):
                assert t_poly_forest_oracle(rho), rho

    def test_cap(self):
        from stratavol.partitions import SetPartition

        with pytest.raises(ResourceCapError):
            t_poly_forest_oracle(SetPartition.discrete(6))


class TestWickLeading:
    def test_two_singletons(self):
        wl = wick_leading([[4], [2]])
        assert wl.value == elementary_cumulant((4, 2))
        assert wl.hbar_exponent == 7

    def test_mixed_groups(self):
        # [(2,1)], [(2)]: glue either the 2 or the 1 to the second group.
        wl = wick_leading([[2, 1], [2]])
        want = (
            elementary_cumulant((2, 2)) * elementary_cumulant((1,))
            + elementary_cumulant((2, 1)) * elementary_cumulant((2,))
        )
        assert wl.value == want
        assert wl.hbar_exponent == (3 + 2 + 3) - 2 + 1

    def test_four_point_pattern(self):
        # [(a)], [(b)], [(c,d)] expands into exactly four products.
        a, b, c, d = 2, 2, 1, 1
        wl = wick_leading([[a], [b], [c, d]])
        want = (
            elementary_cumulant((a, b, c)) * elementary_cumulant((d,))
            + elementary_cumulant((a, b, d)) * elementary_cumulant((c,))
            + elementary_cumulant((a, c)) * elementary_cumulant((b, d))
            + elementary_cumulant((a, d)) * elementary_cumulant((b, c))
        )
        assert wl.value == want

    def test_group_permutation_invariance(self):
        assert wick_leading([[2, 1], [2]]).value == wick_leading([[2], [2, 1]]).value

    def test_single_group_factorizes(self):
        wl = wick_leading([[3, 1]])
        assert wl.value == elementary_cumulant((3,)) * elementary_cumulant((1,))
        assert wl.hbar_exponent == (4 + 2) - 1 + 1

    def test_groups_validation(self):
        with pytest.raises(DomainError):
            WickGroups(())


class TestCConst:
    def test_leading_42(self):
        assert f_cumulant_leading((4, 2)) == PiScalar(Fraction(128, 945), 6)

    def test_value_42(self):
        assert c_const((4, 2)) == PiScalar(Fraction(8, 42525), 6)

    def test_single_two_vanishes(self):
        assert c_const((2,)).is_zero()

    def test_pair_22(self):
        assert c_const((2, 2)) == PiScalar(Fraction(1, 270), 4)

    def test_symmetry(self):
        assert c_const((2, 4)) == c_const((4, 2))
        assert c_const((3, 2, 3)) == c_const((3, 3, 2))

    def test_parity_vanishing(self):
        for m in [(2,), (3, 2), (2, 2, 2)]:
            if (sum(m) + len(m)) % 2 == 1:
                assert c_const(m).is_zero()

    def test_entries_below_two_rejected(self):
        with pytest.raises(DomainError):
            c_const((2, 1))


class TestCSimple:
    def test_odd_vanishes(self):
        assert c_simple(1).is_zero()
        assert c_simple(3).is_zero()

    def test_two_points(self):
        assert c_simple(2) == PiScalar(Fraction(1, 270), 4)

    def test_matches_general_route(self):
        for n in range(1, 7):
            assert c_simple(n) == c_const((2,) * n), n

    def test_validation(self):
        with pytest.raises(DomainError):
            c_simple(0)


class TestVolume:
    def test_worked_example(self):
        result = volume((3, 1))
        assert result.volume == PiScalar(Fraction(8, 297675), 6)
        assert result.genus == 3
        assert result.dim == 7
        assert result.route == "general"
        assert result.c_const == PiScalar(Fraction(8, 42525), 6)

    def test_two_simple_zeros(self):
        result = volume((1, 1))
        assert result.volume == PiScalar(Fraction(1, 1350), 4)
        assert result.dim == 5
        assert result.route == "simple-closed-form"

    def test_odd_total_rejected(self):
        with pytest.raises(DomainError):
            volume((3,))

    def test_empty_rejected(self):
        with pytest.raises(DomainError):
            volume(())

    def test_cross_check_simple_routes(self):
        for mu in [(1, 1), (1, 1, 1, 1)]:
            result = volume(mu, cross_check=True)
            assert result.route == "simple-closed-form"

    def test_pi_power_is_twice_genus(self):
        for mu in [(2,), (1, 1), (4,), (3, 1), (2, 2), (2, 1, 1)]:
            result = volume(mu)
            assert result.volume.pi_pow == 2 * result.genus
            assert result.dim == 2 * result.genus + len(mu) - 1

    def test_volume_equals_constant_over_dim(self):
        result = volume((3, 1))
        assert result.volume == result.c_const / result.dim

    def test_json_shape(self):
        data = volume((3, 1)).as_json_dict()
        assert data == {
            "mu": [3, 1],
            "genus": 3,
            "dim": 7,
            "c": {"num": "8", "den": "42525", "pi_pow": 6},
            "volume": {"num": "8", "den": "297675", "pi_pow": 6},
            "route": "general",
        }

    def test_stratum_spec_validation(self):
        with pytest.raises(DomainError):
            StratumSpec(IntPartition([2, 1]))
        spec = StratumSpec(IntPartition([3, 1]))
        assert spec.genus == 3 and spec.dim == 7


class TestEndToEndAsymptotics:
    def test_shifted_profile_of_single_double_zero(self):
        # covering counts for the profile (3) = (2) + 1 trend toward c(3)
        from stratavol.coverings import asymptotic_ratio
        from stratavol.exact_arith import pi_approx

        target = c_const((3,)).coeff * pi_approx() ** 4
        near = asymptotic_ratio((3,), 15) / target
        far = asymptotic_ratio((3,), 30) / target
        assert abs(far - 1) < Fraction(15, 100)
        assert abs(far - 1) < abs(near - 1)
