import math

import numpy as np
import pytest
from helpers import sample_population

from chanent import channel as chmod
from chanent import entropy as ent
from chanent import matcore, sampler
from chanent.errors import DomainError, InvalidSpectrumError
from chanent.matcore import Spectrum

Q_GRID = (0.3, 0.5, 0.9, 1.0, 1.1, 1.5, 2.0, 3.0, 5.0)
S_GRID = (-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0)


def grid_params():
    return [ent.EntropyParams(q, s) for q in Q_GRID for s in S_GRID]


class TestEntropyParams:
    def test_rejects_bad_orders(self):
        with pytest.raises(DomainError):
            ent.EntropyParams(0.0, 1.0)
        with pytest.raises(DomainError):
            ent.EntropyParams(-2.0, 1.0)
        with pytest.raises(DomainError):
            ent.EntropyParams(1.0, float("nan"))

    def test_family_labels(self):
        assert ent.EntropyParams(2.0, 0.0).family == "renyi-limit"
        assert ent.EntropyParams(1.0, 1.0).family == "von-neumann-limit"
        assert ent.EntropyParams(2.0, 1.0).family == "tsallis"
        assert ent.EntropyParams(2.0, 0.5).family == "unified"


class TestQLog:
    @pytest.mark.parametrize("q", [0.3, 1.0, 2.5])
    def test_vanishes_at_one(self, q):
        assert ent.q_log(1.0, q) == 0.0

    def test_half_order(self):
        assert ent.q_log(4.0, 0.5) == pytest.approx(2.0, abs=1e-14)

    @pytest.mark.parametrize("q", [1.0 - 1e-12, 1.0 + 1e-12])
    def test_limit_is_plain_log(self, q):
        assert abs(ent.q_log(math.e, q) - 1.0) <= 1e-6

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            ent.q_log(0.0, 0.5)
        with pytest.raises(DomainError):
            ent.q_log(2.0, -1.0)


class TestEntropyFromSpectrum:
    def test_flat_distribution_renyi(self):
        spec = Spectrum(np.full(6, 0.25), "singular-values")
        for q in (0.3, 2.0, 5.0):
            got = ent.entropy_from_spectrum(spec, 1.5, ent.EntropyParams(q, 0.0))
            assert got.value == pytest.approx(math.log(6), abs=1e-12)

    def test_point_mass_is_zero(self):
        spec = Spectrum(np.array([3.0, 0.0, 0.0]), "eigenvalues-hermitian")
        for params in grid_params():
            assert abs(ent.entropy_from_spectrum(spec, 3.0, params).value) <= 1e-14

    def test_tsallis_two(self):
        # 1 - sum p**2 at q = 2, s = 1
        spec = Spectrum(np.array([0.75, 0.25]), "eigenvalues-hermitian")
        got = ent.entropy_from_spectrum(spec, 1.0, ent.EntropyParams(2.0, 1.0))
        assert got.value == pytest.approx(3.0 / 8.0, abs=1e-15)
        assert got.family == "tsallis"

    def test_rejects_bad_spectra(self):
        with pytest.raises(InvalidSpectrumError):
            ent.entropy_from_spectrum(Spectrum(np.array([-1.0, 2.0])), 1.0, ent.EntropyParams(2, 1))
        with pytest.raises(InvalidSpectrumError):
            ent.entropy_from_spectrum(Spectrum(np.zeros(3)), 1.0, ent.EntropyParams(2, 1))


class TestMapEntropy:
    def test_identity_channel_vanishes_everywhere(self):
        dyn = chmod.dynamical_from_kraus(sampler.named_channel("identity", 2))
        for params in grid_params():
            assert abs(ent.map_entropy(dyn, params).value) <= 1e-12

    def test_completely_depolarizing_worked_example(self):
        dyn = chmod.dynamical_from_kraus(sampler.named_channel("completely-depolarizing", 2))
        got = ent.map_entropy(dyn, ent.EntropyParams(0.5, 1.0))
        assert got.value == pytest.approx(2.0, abs=1e-12)

    @pytest.mark.parametrize("d", [2, 3])
    def test_completely_depolarizing_is_maximal(self, d):
        dyn = chmod.dynamical_from_kraus(sampler.named_channel("completely-depolarizing", d))
        for params in grid_params():
            want = ent.uniform_entropy(d * d, params)
            assert ent.map_entropy(dyn, params).value == pytest.approx(want, rel=1e-12, abs=1e-12)
        renyi = ent.map_entropy(dyn, ent.EntropyParams(0.5, 0.0))
        assert renyi.value == pytest.approx(2 * math.log(d), abs=1e-12)


class TestReceiverEntropy:
    @pytest.mark.parametrize("d", [2, 3])
    def test_identity_channel_is_maximal(self, d):
        sup = chmod.superoperator_from_kraus(sampler.named_channel("identity", d))
        got = ent.receiver_entropy(sup, ent.EntropyParams(3.0, 0.0))
        assert got.value == pytest.approx(2 * math.log(d), abs=1e-12)
        for params in grid_params():
            want = ent.uniform_entropy(d * d, params)
            assert ent.receiver_entropy(sup, params).value == pytest.approx(want, rel=1e-12, abs=1e-12)

    def test_completely_depolarizing_vanishes(self):
        sup = chmod.superoperator_from_kraus(sampler.named_channel("completely-depolarizing", 2))
        for params in grid_params():
            assert abs(ent.receiver_entropy(sup, params).value) <= 1e-12

    def test_unitary_channel_is_maximal(self):
        rng = np.random.default_rng(101)
        u = sampler.haar_unitary(3, rng)
        sup = chmod.superoperator_from_kraus(chmod.KrausChannel(3, (u,)))
        got = ent.receiver_entropy(sup, ent.EntropyParams(0.5, 0.0))
        assert got.value == pytest.approx(2 * math.log(3), abs=1e-10)


def _channel_spectra(ch):
    dyn = chmod.dynamical_from_kraus(ch)
    sup = chmod.superoperator_from_kraus(ch)
    return chmod.dynamical_spectrum(dyn), chmod.superoperator_spectrum(sup)


class TestLimitConsistency:
    def test_s_limit_shrinks_linearly(self):
        for _, d, _, ch in sample_population(911, (2, 3), ("cptp",), 3):
            choi, sup = _channel_spectra(ch)
            norm = float(np.sum(sup.values))
            for q in (0.3, 2.0, 5.0):
                for spec, w in ((choi, float(d)), (sup, norm)):
                    at_zero = ent.entropy_from_spectrum(spec, w, ent.EntropyParams(q, 0.0)).value
                    for eps, tol in ((1e-4, 1e-2), (1e-6, 1e-4)):
                        for sign in (1.0, -1.0):
                            near = ent.entropy_from_spectrum(
                                spec, w, ent.EntropyParams(q, sign * eps)
                            ).value
                            assert abs(near - at_zero) <= tol

    def test_q_limit_matches_von_neumann(self):
        for _, d, _, ch in sample_population(912, (2, 3), ("cptp",), 3):
            choi, sup = _channel_spectra(ch)
            norm = float(np.sum(sup.values))
            for s in (-1.0, 0.0, 1.0):
                for spec, w in ((choi, float(d)), (sup, norm)):
                    vn = ent.entropy_from_spectrum(spec, w, ent.EntropyParams(1.0, s)).value
                    for eps, tol in ((1e-4, 1e-2), (1e-6, 1e-4)):
                        for sign in (1.0, -1.0):
                            near = ent.entropy_from_spectrum(
                                spec, w, ent.EntropyParams(1.0 + sign * eps, s)
                            ).value
                            assert abs(near - vn) <= tol


class TestBoundsAndOracles:
    def test_nonnegative_on_samples(self):
        pop = sample_population(913, (2, 3), ("cptp", "unitary-mixture", "unistochastic"), 3)
        for _, d, _, ch in pop:
            choi, sup = _channel_spectra(ch)
            norm = float(np.sum(sup.values))
            for params in grid_params():
                assert ent.entropy_from_spectrum(choi, float(d), params).value >= -1e-10
                assert ent.entropy_from_spectrum(sup, norm, params).value >= -1e-10

    def test_rank_upper_bound(self):
        pop = sample_population(914, (2, 3), ("cptp", "unitary-mixture"), 3)
        pop.append(("named", 2, 0, sampler.named_channel("dephasing", 2, 0.4)))
        for _, d, _, ch in pop:
            choi, sup = _channel_spectra(ch)
            norm = float(np.sum(sup.values))
            rank_choi = int(np.count_nonzero(choi.values))
            rank_sup = int(np.count_nonzero(sup.values))
            for params in grid_params():
                m = ent.entropy_from_spectrum(choi, float(d), params).value
                r = ent.entropy_from_spectrum(sup, norm, params).value
                assert m <= ent.uniform_entropy(rank_choi, params) + 1e-9
                assert r <= ent.uniform_entropy(rank_sup, params) + 1e-9
                assert m <= ent.uniform_entropy(d * d, params) + 1e-9
                assert r <= ent.uniform_entropy(d * d, params) + 1e-9

    def test_map_entropy_matches_gram_route(self):
        pop = sample_population(915, (2, 3), ("cptp", "unitary-mixture"), 3)
        pop.append(("named", 2, 0, sampler.named_channel("amplitude-damping", 2, 0.35)))
        for _, d, _, ch in pop:
            dyn = chmod.dynamical_from_kraus(ch)
            gram_vals = matcore.hermitian_eigenvalues(chmod.kraus_gram(ch)).values
            gram_vals = matcore.clamp_spectrum(gram_vals, neg_tol=matcore.eig_tol(d * d))
            gram_spec = Spectrum(gram_vals, "eigenvalues-hermitian")
            for params in grid_params():
                via_choi = ent.map_entropy(dyn, params).value
                via_gram = ent.entropy_from_spectrum(gram_spec, float(d), params).value
                scale = max(abs(via_choi), abs(via_gram), 1.0)
                assert abs(via_choi - via_gram) <= 1e-9 * scale


class TestUniformEntropy:
    def test_limits_agree_with_kernel(self):
        spec = Spectrum(np.ones(5), "singular-values")
        for params in grid_params():
            kernel = ent.entropy_from_spectrum(spec, 5.0, params).value
            assert ent.uniform_entropy(5, params) == pytest.approx(kernel, rel=1e-12, abs=1e-12)

    def test_single_outcome(self):
        assert ent.uniform_entropy(1, ent.EntropyParams(0.7, 2.0)) == 0.0
        with pytest.raises(DomainError):
            ent.uniform_entropy(0, ent.EntropyParams(0.7, 2.0))
