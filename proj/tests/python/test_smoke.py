import numpy as np
import pytest

try:
    import pytubal as tb
except ImportError:
    import _pytubal as tb


def rand_tubal(shape, seed):
    rng = np.random.default_rng(seed)
    return np.asfortranarray(rng.standard_normal(shape))


def test_tproduct_matches_fft_path():
    a = rand_tubal((3, 4, 5), 0)
    b = rand_tubal((4, 2, 5), 1)
    c = tb.tproduct(a, b)
    ah = np.fft.fft(a, axis=2)
    bh = np.fft.fft(b, axis=2)
    ch = np.einsum("ikp,kjp->ijp", ah, bh)
    want = np.fft.ifft(ch, axis=2)
    assert np.allclose(c, want, atol=1e-12)


def test_tsvd_reconstructs():
    a = rand_tubal((5, 3, 4), 2)
    u, s, v, norms = tb.tsvd(a)
    ah = np.fft.fft(a, axis=2)
    uh, sh, vh = (np.fft.fft(x, axis=2) for x in (u, s, v))
    rec = np.fft.ifft(
        np.einsum("ikp,klp,jlp->ijp", uh, sh, vh.conj()), axis=2
    )
    assert np.allclose(rec, a, atol=1e-10)
    assert norms == sorted(norms, reverse=True)


def test_hotsvd_roundtrip_and_bound():
    a = rand_tubal((4, 5, 3, 3), 3)
    core, factors, spectra, bound = tb.hotsvd(a)
    assert bound == 0.0
    rec = tb.reconstruct(core, factors)
    assert np.allclose(rec, a, atol=1e-10)

    for fn in (tb.tr_hotsvd, tb.seq_tr_hotsvd):
        core_t, factors_t, spectra_t, bound_t = fn(a, [2, 3, 2])
        err = np.linalg.norm(tb.reconstruct(core_t, factors_t) - a)
        assert err <= bound_t + 1e-10 * np.linalg.norm(a)


def test_tten_roundtrip(tmp_path):
    a = rand_tubal((3, 2, 4), 4)
    path = str(tmp_path / "x.tten")
    tb.write_tten(path, a)
    b = tb.read_tten(path)
    assert b.shape == a.shape
    assert np.array_equal(np.real(b), a)


def test_regressions():
    assert tb.hilbert_demo_pass()
    assert tb.selftest()
