"""Certificate tests: frozen examples plus dynamics-backed soundness checks."""

from fractions import Fraction

import numpy as np
import pytest

from pairwalk import graphs
from pairwalk.certify import (
    certify_pair_transfer,
    certify_periodic,
    certify_pst,
    pair_transfer_at,
    phase_at,
)
from pairwalk.dynamics import expm_oracle, fidelity, fidelity_curve, transition_matrix
from pairwalk.errors import InvalidParams, NotExact
from pairwalk.exactnum import ExactScalar, ExactTime
from pairwalk.graphs import PairState, VertexState, laplacian
from pairwalk.spectral import graph_decomposition

HALF_PI = ExactTime(Fraction(1, 2))


def dec_of(g, which="laplacian"):
    return graph_decomposition(g, which)


class TestPairTransferCertificates:
    def test_cycle4_minimum_time_and_phase(self):
        cert = certify_pair_transfer(dec_of(graphs.cycle(4)), PairState(0, 1), PairState(2, 3))
        assert cert.exists
        assert cert.delta == 1 and cert.g == 2
        assert cert.tau0 == HALF_PI
        assert cert.theta0 == ExactScalar.integer(4)
        assert cert.phase.exact_str() == "1"

    def test_cycle4_adjacency_pair_transfer_phase_flips(self):
        cert = certify_pair_transfer(
            dec_of(graphs.cycle(4), "adjacency"), PairState(0, 1), PairState(2, 3)
        )
        assert cert.exists and cert.tau0 == HALF_PI
        assert cert.phase.exact_str() == "-1"

    def test_complete_distinct_pairs_fail(self):
        cert = certify_pair_transfer(dec_of(graphs.complete(5)), PairState(0, 1), PairState(2, 3))
        assert not cert.exists
        assert cert.failure.kind == "NotStronglyCospectral"

    def test_same_pair_rejected(self):
        with pytest.raises(InvalidParams):
            certify_pair_transfer(dec_of(graphs.cycle(4)), PairState(0, 1), PairState(1, 0))

    def test_float_decomposition_refused(self):
        dec = dec_of(graphs.cycle(7))
        with pytest.raises(NotExact):
            certify_pair_transfer(dec, PairState(0, 1), PairState(2, 3))

    def test_regular_graph_laplacian_adjacency_agreement(self):
        # for regular graphs the two walks certify the same existence and time
        for g in (graphs.cycle(4), graphs.complete(4), graphs.circulant(6, [1, 5]),
                  graphs.circulant(8, [4]), graphs.circulant(6, [2, 4])):
            dl = dec_of(g, "laplacian")
            da = dec_of(g, "adjacency")
            for pair in [(PairState(0, 1), PairState(2, 3))]:
                cl = certify_pair_transfer(dl, *pair)
                ca = certify_pair_transfer(da, *pair)
                assert cl.exists == ca.exists
                if cl.exists:
                    assert cl.tau0 == ca.tau0


class TestPstCertificates:
    def test_path2_baseline(self):
        cert = certify_pst(dec_of(graphs.path(2), "adjacency"), VertexState(0), VertexState(1))
        assert cert.exists and cert.tau0 == HALF_PI
        assert cert.phase.exact_str() == "-i"

    def test_cycle4_antipodal(self):
        cert = certify_pst(dec_of(graphs.cycle(4), "adjacency"), VertexState(0), VertexState(2))
        assert cert.exists and cert.tau0 == HALF_PI
        assert cert.g == 2 and cert.delta == 1
        # minus class holds the middle eigenvalue 0
        assert ExactScalar.integer(0) in cert.cospectral.minus

    def test_complete_no_pst(self):
        for n in (3, 5):
            cert = certify_pst(dec_of(graphs.complete(n), "adjacency"), VertexState(0), VertexState(1))
            assert not cert.exists
            assert cert.failure.kind == "NotStronglyCospectral"


class TestPeriodicity:
    def test_complete_adjacency_pair_always_periodic(self):
        cert = certify_periodic(dec_of(graphs.complete(5), "adjacency"), PairState(0, 1))
        assert cert.periodic and cert.always
        ph = cert.phase_at(HALF_PI)
        assert ph.exact_str() == "i"

    def test_path2_laplacian_pair_always(self):
        cert = certify_periodic(dec_of(graphs.path(2)), PairState(0, 1))
        assert cert.periodic and cert.always
        assert cert.phase_at(ExactTime(Fraction(1))).exact_str() == "1"

    def test_cycle4_pair_minimal_period(self):
        cert = certify_periodic(dec_of(graphs.cycle(4)), PairState(0, 1))
        assert cert.periodic and not cert.always
        assert cert.minimal_period == ExactTime(Fraction(1))
        # oracle: brute-force exponential at t = pi returns the state up to phase
        u = expm_oracle(laplacian(graphs.cycle(4)), np.pi)
        v = PairState(0, 1).vector(4).astype(complex)
        out = u @ v
        overlap = abs(np.vdot(v, out)) / (np.linalg.norm(v) * np.linalg.norm(out))
        assert overlap == pytest.approx(1.0, abs=1e-12)
        # and the phase at the period matches the certificate
        ph = cert.phase_at(cert.minimal_period)
        ratio = out[0] / v[0]
        assert ratio == pytest.approx(ph.complex_value, abs=1e-12)

    def test_phase_at_zero_is_one(self):
        for g, which in [(graphs.cycle(4), "laplacian"), (graphs.complete(3), "adjacency")]:
            assert phase_at(dec_of(g, which), PairState(0, 1), ExactTime(Fraction(0))).exact_str() == "1"

    def test_not_periodic_at_other_times(self):
        cert = certify_periodic(dec_of(graphs.cycle(4)), PairState(0, 1))
        assert cert.phase_at(ExactTime(Fraction(1, 3))) is None
        assert cert.phase_at(ExactTime(Fraction(1, 2), 5)) is None


class TestTransferAt:
    def test_cycle4_at_half_pi(self):
        ph, detail = pair_transfer_at(
            dec_of(graphs.cycle(4)), PairState(0, 1), PairState(2, 3), HALF_PI
        )
        assert ph is not None and ph.exact_str() == "1"

    def test_cycle4_reversed_pair_uses_sign_flip(self):
        # transfer onto the reversed pair is periodicity with a negated phase
        ph, _ = pair_transfer_at(
            dec_of(graphs.cycle(4)), PairState(0, 1), PairState(1, 0), ExactTime(Fraction(1))
        )
        assert ph is not None
        assert ph.exact_str() == "-1"
        u = expm_oracle(laplacian(graphs.cycle(4)), np.pi)
        v = PairState(0, 1).vector(4).astype(complex)
        w = PairState(1, 0).vector(4).astype(complex)
        amp = (w @ u @ v) / 2
        assert amp == pytest.approx(ph.complex_value, abs=1e-12)

    def test_off_time_fails(self):
        ph, detail = pair_transfer_at(
            dec_of(graphs.cycle(4)), PairState(0, 1), PairState(2, 3), ExactTime(Fraction(1, 4))
        )
        assert ph is None and "phase alignment" in detail


FAMILY_POOL = [
    graphs.path(2),
    graphs.path(3),
    graphs.cycle(4),
    graphs.cycle(5),
    graphs.cycle(6),
    graphs.complete(4),
    graphs.complete(6),
    graphs.circulant(8, [4]),
    graphs.circulant(8, [1, 7]),
    graphs.circulant(12, [6]),
    graphs.circulant(6, [2, 4]),
    graphs.circulant(10, [5]),
]


def _positive_transfer_certs(max_n=12):
    """All positive pair/vertex certificates over the pool, with their decs."""
    found = []
    for g in FAMILY_POOL:
        if g.n > max_n:
            continue
        for which in ("laplacian", "adjacency"):
            dec = dec_of(g, which)
            if not dec.is_exact:
                continue
            for a in range(min(g.n, 4)):
                for b in range(a + 1, min(g.n, 5)):
                    for c in range(min(g.n, 4)):
                        for d in range(c + 1, min(g.n, 5)):
                            if {a, b} == {c, d}:
                                continue
                            cert = certify_pair_transfer(dec, PairState(a, b), PairState(c, d))
                            if cert.exists:
                                found.append((dec, PairState(a, b), PairState(c, d), cert))
            if which == "adjacency":
                for u in range(min(g.n, 4)):
                    for v in range(u + 1, g.n):
                        cert = certify_pst(dec, VertexState(u), VertexState(v))
                        if cert.exists:
                            found.append((dec, VertexState(u), VertexState(v), cert))
    return found


def test_certificate_soundness_and_even_odd_returns():
    positives = _positive_transfer_certs()
    assert len(positives) >= 5, "the pool should produce several positive certificates"
    for dec, s1, s2, cert in positives:
        tau0 = cert.tau0.value
        chi = cert.phase.complex_value
        v1 = s1.vector(dec.n).astype(complex)
        v2 = s2.vector(dec.n).astype(complex)
        # fidelity 1 and the certified phase at tau0
        assert fidelity(dec, s1, s2, tau0) == pytest.approx(1.0, abs=1e-9)
        u = transition_matrix(dec, tau0)
        np.testing.assert_allclose(u @ v1, chi * v2, atol=1e-9)
        # even and odd multiples return and transfer with powered phases
        for k in range(-2, 3):
            u_even = transition_matrix(dec, 2 * k * tau0)
            np.testing.assert_allclose(u_even @ v1, chi ** (2 * k) * v1, atol=1e-9)
            u_odd = transition_matrix(dec, (2 * k + 1) * tau0)
            np.testing.assert_allclose(u_odd @ v1, chi ** (2 * k + 1) * v2, atol=1e-9)


def test_certificate_minimality_on_grid():
    positives = _positive_transfer_certs()
    for dec, s1, s2, cert in positives:
        tau0 = cert.tau0.value
        grid = np.linspace(0, tau0, 1002)[1:-1]
        fids = fidelity_curve(dec, s1, s2, grid)
        assert fids.max() < 1 - 1e-6, f"{dec.source} {s1}->{s2} peaks early"


class TestQuadraticFieldCertificates:
    def test_path3_pst_in_sqrt2_field(self):
        # end-to-end quadratic case: spectrum {sqrt(2), 0, -sqrt(2)}
        dec = dec_of(graphs.path(3), "adjacency")
        cert = certify_pst(dec, VertexState(0), VertexState(2))
        assert cert.exists
        assert cert.delta == 2 and cert.g == 1
        assert str(cert.tau0) == "pi/sqrt(2)"
        assert cert.phase.exact_str() == "-1"
        assert fidelity(dec, VertexState(0), VertexState(2), cert.tau0.value) == pytest.approx(1.0, abs=1e-12)
        u = transition_matrix(dec, cert.tau0.value)
        assert u[2, 0] == pytest.approx(-1.0, abs=1e-12)

    def test_cycle5_pairs_not_strongly_cospectral(self):
        dec = dec_of(graphs.cycle(5))
        for cd in [(1, 2), (2, 3), (2, 4)]:
            cert = certify_pair_transfer(dec, PairState(0, 1), PairState(*cd))
            assert not cert.exists
            assert cert.failure.kind == "NotStronglyCospectral"

    def test_cycle5_pair_periodicity_with_irrational_phase(self):
        dec = dec_of(graphs.cycle(5))
        cert = certify_periodic(dec, PairState(0, 1))
        assert cert.periodic and cert.delta == 5
        assert str(cert.minimal_period) == "2*pi/sqrt(5)"
        t = cert.minimal_period.value
        assert fidelity(dec, PairState(0, 1), PairState(0, 1), t) == pytest.approx(1.0, abs=1e-12)
        ph = cert.phase_at(cert.minimal_period)
        assert ph is not None and ph.exponent is None  # not a root of unity
        u = transition_matrix(dec, t)
        v = PairState(0, 1).vector(5).astype(complex)
        assert (u @ v)[0] / v[0] == pytest.approx(ph.complex_value, abs=1e-10)

    def test_path4_golden_ratio_spectrum_fails_ratio_condition(self):
        dec = dec_of(graphs.path(4), "adjacency")
        cert = certify_pst(dec, VertexState(0), VertexState(3))
        assert not cert.exists and cert.failure.kind == "RatioCondition"
        pcert = certify_periodic(dec, VertexState(0))
        assert not pcert.periodic and pcert.failure.kind == "RatioCondition"
