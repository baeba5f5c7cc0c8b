"""Injectivity certification: exact tests, witness search, minor systems.

A sampling operator is injective on a signal variety exactly when its
kernel meets the difference variety only at zero.  :func:`certify`
dispatches between three regimes:

* the difference variety fills the ambient space, so a rank computation
  decides injectivity exactly;
* real rank-one quadratic sampling, where the subset-span (complement)
  property decides it exactly for m <= 24;
* everything else, where alternating projections between the kernel and
  the difference variety either produce an explicit unit-norm witness
  (refutation) or a positive residual margin (a probabilistic
  certificate: no finite numeric test can certify genericity).

Refutations are constructive: every witness is split into a collision
pair of distinct signals with identical samples.
"""

import dataclasses
import itertools
import math

import numpy as np

from .sampling import (MeasurementEnsemble, apply, derived_rng, lift_ensemble,
                       lift_rank_one, tau, tau_inverse)
from .varieties import (KIND_HERM_SIG, KIND_LOW_RANK, KIND_RANK_ONE_REAL,
                        KIND_SPARSE, SIGNAL_KINDS, difference_closure,
                        project)

CERTIFIED_EXACT = "certified_exact"
NO_WITNESS_FOUND = "no_witness_found"
REFUTED_WITH_WITNESS = "refuted_with_witness"
INCONCLUSIVE = "inconclusive"

VANISHES_ON_ALL_SAMPLES = "vanishes_on_all_samples"
NON_DEGENERATE = "non_degenerate"

_STREAM_RESTART = 20
_STREAM_MINOR = 21
_STREAM_PROBE = 22


@dataclasses.dataclass(frozen=True)
class SearchConfig:
    """Knobs for witness search; restart r uses the derived stream (seed, r)."""

    restarts: int = 200
    max_iters: int = 500
    tol_feas: float = 1e-8
    margin_threshold: float = 1e-6
    kernel_cutoff: float = 1e-10
    seed: int = 0
    # extra iterations granted once a restart reaches feasibility, so the
    # returned witness is polished to the fixed point of both projections
    polish_iters: int = 3000

    def tolerances(self):
        return {"tol_feas": self.tol_feas,
                "margin_threshold": self.margin_threshold,
                "kernel_cutoff": self.kernel_cutoff}


@dataclasses.dataclass
class Witness:
    """Unit-Frobenius element of a difference variety annihilated by the
    sampling map (up to ``residual``).  Always a projection output, so
    variety membership is exact."""

    element: np.ndarray
    residual: float
    restart: int
    iterations: int


@dataclasses.dataclass
class SearchResult:
    witness: Witness = None
    margin: float = None
    restarts_used: int = 0
    iterations: int = 0
    kernel_dim: int = 0
    scale: float = 0.0


@dataclasses.dataclass
class InjectivityVerdict:
    status: str
    margin: float = None
    witness: Witness = None
    collision: tuple = None
    restarts_used: int = 0
    iterations: int = 0
    tolerances: dict = dataclasses.field(default_factory=dict)


@dataclasses.dataclass
class MinorSystemResult:
    min_residual: float
    argmin: np.ndarray = None
    restarts: int = 0


@dataclasses.dataclass
class ProbeResult:
    status: str
    sample: np.ndarray = None
    value: complex = None
    samples_checked: int = 0


def _hermitize(x):
    x = np.asarray(x)
    return 0.5 * (x + x.conj().T)


# ---------------------------------------------------------------------------
# complement property (exact test for real rank-one quadratic sampling)
# ---------------------------------------------------------------------------


def complement_property(vectors):
    """Check that every index subset or its complement spans R^d.

    Returns ``(True, None)`` or ``(False, S)`` with ``S`` the
    lexicographically first failing subset (0-based, sorted tuple).
    Refuses m > 24 (the test enumerates up to 2^m subsets); use
    witness search on the lifted problem beyond that.
    """
    a = np.asarray(vectors, dtype=float)
    if a.ndim != 2:
        raise ValueError("expected a list of equal-length real vectors")
    m, d = a.shape
    if m > 24:
        raise ValueError("m > 24: subset enumeration refused; "
                         "run witness_search on the rank-one lift instead")
    full = (1 << m) - 1
    cache = {}

    def spans(mask):
        val = cache.get(mask)
        if val is None:
            idx = [j for j in range(m) if (mask >> j) & 1]
            val = len(idx) >= d and np.linalg.matrix_rank(a[idx]) == d
            cache[mask] = val
        return val

    def fails(mask):
        return not spans(mask) and not spans(full ^ mask)

    # decide the boolean over complement pairs (|S| <= m/2 suffices)
    found = False
    for size in range(0, m // 2 + 1):
        for comb in itertools.combinations(range(m), size):
            mask = 0
            for j in comb:
                mask |= 1 << j
            if fails(mask):
                found = True
                break
        if found:
            break
    if not found:
        return True, None

    # lexicographically first failing subset (depth-first = lex order)
    def rec(subset, mask, start):
        if fails(mask):
            return subset
        for j in range(start, m):
            hit = rec(subset + (j,), mask | (1 << j), j + 1)
            if hit is not None:
                return hit
        return None

    return False, rec((), 0, 0)


# ---------------------------------------------------------------------------
# kernel coordinates
# ---------------------------------------------------------------------------
#
# Witness search runs in a real coordinate system matched to the variety:
#   real       flatten (real ambient)
#   complex    [Re; Im] blocks, 2n coordinates
#   hermitian  tau^-1 realification (a Frobenius isometry onto R^{d x d})
# All three are isometries, so unit coordinate vectors are unit-Frobenius
# ambient elements and kernel projections are orthogonal projections.


def _variety_mode(w):
    if w.kind == KIND_HERM_SIG:
        return "hermitian"
    return "real" if w.field == "real" else "complex"


def _to_coords(x, mode):
    x = np.asarray(x)
    if mode == "real":
        return np.ascontiguousarray(x.real, dtype=float).ravel()
    if mode == "complex":
        v = x.ravel()
        return np.concatenate([v.real, v.imag])
    return tau_inverse(_hermitize(x)).ravel()


def _from_coords(v, shape, mode):
    if mode == "real":
        return v.reshape(shape)
    if mode == "complex":
        n = v.size // 2
        return (v[:n] + 1j * v[n:]).reshape(shape)
    return tau(v.reshape(shape))


def _stacked_rows(e, mode):
    """Real matrix whose kernel (as coordinates) is ker of the sampling map."""
    rows = []
    for op in e.operators:
        a = op.ravel()
        if mode == "real":
            rows.append(a.real)
            if e.field == "complex":
                rows.append(a.imag)
        elif mode == "complex":
            rows.append(np.concatenate([a.real, a.imag]))
            rows.append(np.concatenate([a.imag, -a.real]))
        else:
            rows.append(tau_inverse(_hermitize(op)).ravel())
    return np.array(rows, dtype=float)


def _kernel_basis(rows, cutoff):
    """Orthonormal nullspace basis with singular-value cutoff relative to
    the largest singular value; also returns that largest value."""
    _, s, vt = np.linalg.svd(rows, full_matrices=True)
    smax = float(s[0]) if s.size else 0.0
    rank = int(np.sum(s > cutoff * smax)) if smax > 0 else 0
    return vt[rank:].T.copy(), smax


# ---------------------------------------------------------------------------
# witness search
# ---------------------------------------------------------------------------


def witness_search(e, w, cfg=None):
    """Search ker(sampling map) for a nonzero element of the variety ``w``.

    Alternates orthogonal projection onto the precomputed kernel with the
    metric projection onto ``w``, renormalizing to unit Frobenius norm
    each iteration, over ``cfg.restarts`` independent seeded starts.
    Feasibility means sample residual at most ``tol_feas`` times the
    operator scale.  The returned margin is the smallest residual seen at
    any unit-norm variety point, across all restarts.
    """
    cfg = cfg or SearchConfig()
    if w.ambient[0] != e.shape or w.d != e.d:
        raise ValueError("variety ambient does not match ensemble shape")
    mode = _variety_mode(w)
    if mode == "hermitian":
        for op in e.operators:
            dev = np.max(np.abs(op - op.conj().T))
            if dev > 1e-10 * max(1.0, float(np.linalg.norm(op))):
                raise ValueError("herm_sig search needs Hermitian operators")
    rows = _stacked_rows(e, mode)
    basis, scale = _kernel_basis(rows, cfg.kernel_cutoff)
    kdim = basis.shape[1]
    if kdim == 0:
        return SearchResult(kernel_dim=0, scale=scale)

    shape = w.ambient_shape()
    feas = cfg.tol_feas * max(scale, 1e-300)
    margin = math.inf
    total_iters = 0
    for ridx in range(cfg.restarts):
        rng = derived_rng(cfg.seed, _STREAM_RESTART, ridx)
        x = basis @ rng.standard_normal(kdim)
        nx = np.linalg.norm(x)
        if nx == 0.0:
            continue
        x = x / nx
        best_res = math.inf
        best_q = None
        iters = 0
        budget = cfg.max_iters
        hard_cap = max(20000, cfg.max_iters)
        polishing = False
        history = []
        while iters < budget:
            iters += 1
            total_iters += 1
            q = project(_from_coords(x, shape, mode), w)
            nq = float(np.linalg.norm(q))
            if nq < 1e-300:
                break
            q = q / nq
            xv = _to_coords(q, mode)
            res = float(np.linalg.norm(rows @ xv))
            history.append(res)
            if res < best_res:
                best_res, best_q = res, q
            if res < margin:
                margin = res
            if not polishing and best_res <= feas:
                polishing = True
                budget = min(hard_cap, iters + cfg.polish_iters)
            # extend the budget while the run is still contracting: slow
            # linear convergence to a genuine intersection can need far
            # more than max_iters, while stalled runs exit via the
            # fixed-point break long before this matters
            if iters >= budget - 1 and budget < hard_cap:
                back = history[-min(len(history), 500)]
                if res <= 0.5 * back:
                    budget = min(hard_cap, budget + 500)
            if res <= 1e-14 * scale:
                break
            x_new = basis @ (basis.T @ xv)
            nn = np.linalg.norm(x_new)
            if nn < 1e-300:
                break
            x_new = x_new / nn
            delta = np.linalg.norm(x_new - x)
            x = x_new
            if delta <= (1e-15 if polishing else 1e-13):
                break
        if best_q is not None and best_res <= feas:
            wit = Witness(element=best_q, residual=best_res,
                          restart=ridx, iterations=iters)
            return SearchResult(witness=wit, margin=float(margin),
                                restarts_used=ridx + 1, iterations=total_iters,
                                kernel_dim=kdim, scale=scale)
    return SearchResult(margin=float(margin), restarts_used=cfg.restarts,
                        iterations=total_iters, kernel_dim=kdim, scale=scale)


# ---------------------------------------------------------------------------
# collisions
# ---------------------------------------------------------------------------


def witness_to_collision(q, signal):
    """Split a difference-variety witness into two signal-variety members
    with identical samples.

    sparse: support split into two halves of size <= k.  low_rank: SVD
    split, leading <= r triples versus the negated remainder.  herm_sig:
    x, y from the signed eigenpairs.  rank_one_real: with q = u v^T,
    solve x - y = 4u, x + y = v.
    """
    q = np.asarray(q)
    if signal.kind == KIND_SPARSE:
        idx = np.flatnonzero(q)
        if idx.size == 0:
            raise ValueError("zero witness")
        half = (idx.size + 1) // 2
        x = np.zeros_like(q)
        y = np.zeros_like(q)
        x[idx[:half]] = q[idx[:half]]
        y[idx[half:]] = -q[idx[half:]]
        return x, y
    if signal.kind == KIND_LOW_RANK:
        r = signal.param
        u, s, vh = np.linalg.svd(q, full_matrices=False)
        x = (u[:, :r] * s[:r]) @ vh[:r]
        return x, x - q
    if signal.kind == KIND_HERM_SIG:
        vals, vecs = np.linalg.eigh(_hermitize(q))
        ip, im = int(np.argmax(vals)), int(np.argmin(vals))
        lam_p = max(float(vals[ip]), 0.0)
        lam_m = max(float(-vals[im]), 0.0)
        if lam_p == 0.0 and lam_m == 0.0:
            raise ValueError("zero witness")
        x = math.sqrt(lam_p) * vecs[:, ip]
        y = math.sqrt(lam_m) * vecs[:, im]
        return x, y
    if signal.kind == KIND_RANK_ONE_REAL:
        qr = np.real(q)
        u, s, vh = np.linalg.svd(qr, full_matrices=False)
        if s[0] == 0.0:
            raise ValueError("zero witness")
        uu = s[0] * u[:, 0]
        vv = vh[0]
        return 0.5 * (vv + 4.0 * uu), 0.5 * (vv - 4.0 * uu)
    raise ValueError(f"{signal.kind} is not a signal variety")


def collision_residual(e, signal, x, y):
    """Sample disagreement of a collision pair (lifted for the quadratic
    kinds); small values confirm the pair is indistinguishable."""
    if signal.kind in (KIND_HERM_SIG, KIND_RANK_ONE_REAL):
        if e.shape == "vector":
            e = lift_ensemble(e)
        lx, ly = lift_rank_one(x), lift_rank_one(y)
        if signal.kind == KIND_RANK_ONE_REAL:
            lx, ly = lx.real, ly.real
        return float(np.linalg.norm(apply(e, lx).y - apply(e, ly).y))
    return float(np.linalg.norm(apply(e, x).y - apply(e, y).y))


def collision_is_distinct(x, y, signal, tol=1e-8):
    """True when the two collision signals are not equivalent."""
    from .recovery import equivalence_distance

    if signal.kind in (KIND_HERM_SIG, KIND_RANK_ONE_REAL):
        field = "complex" if signal.kind == KIND_HERM_SIG else "real"
        scale = max(np.linalg.norm(x), np.linalg.norm(y), 1.0)
        return equivalence_distance(x, y, field) > tol * scale
    return float(np.linalg.norm(np.asarray(x) - np.asarray(y))) > tol


# ---------------------------------------------------------------------------
# certification
# ---------------------------------------------------------------------------


def _null_vector(rows, d):
    """A unit vector orthogonal to every row (rows may be empty)."""
    if len(rows) == 0:
        v = np.zeros(d)
        v[0] = 1.0
        return v
    a = np.asarray(rows, dtype=float)
    _, _, vt = np.linalg.svd(a, full_matrices=True)
    return vt[-1]


def _rank_one_vectors(e):
    """Extract frame vectors a_j from a symmetric PSD rank-one matrix
    ensemble, or None if any operator fails that description."""
    out = []
    for op in e.operators:
        a = np.real(op)
        scale = max(1.0, float(np.linalg.norm(a)))
        if np.max(np.abs(a - a.T)) > 1e-10 * scale:
            return None
        vals, vecs = np.linalg.eigh(a)
        lam = float(vals[-1])
        if lam < 0 or np.max(np.abs(vals[:-1])) > 1e-10 * max(lam, 1.0):
            return None
        out.append(math.sqrt(lam) * vecs[:, -1] if lam > 0 else np.zeros(e.d))
    return out


def _symmetrized(e):
    ops = [0.5 * (np.real(op) + np.real(op).T) for op in e.operators]
    return MeasurementEnsemble(field="real", shape="matrix", d=e.d,
                               operators=ops, seed=e.seed, hermitian=True)


def _hermitized(e):
    ops = [_hermitize(op) for op in e.operators]
    return MeasurementEnsemble(field="complex", shape="matrix", d=e.d,
                               operators=ops, seed=e.seed, hermitian=True)


def certify(e, signal, cfg=None):
    """Decide injectivity of the sampling map on a signal variety.

    Dispatch: an exact kernel-nullity check when the difference variety
    is the full ambient space; the complement property when the signal is
    the real rank-one quadratic lift and m <= 24; otherwise witness
    search on the difference variety.  Refuted verdicts carry a witness
    and a collision pair.
    """
    cfg = cfg or SearchConfig()
    if signal.kind not in SIGNAL_KINDS:
        raise ValueError(f"{signal.kind} is not a signal variety")
    w = difference_closure(signal)
    tols = cfg.tolerances()

    vectors = None
    e_search = e
    if signal.kind == KIND_RANK_ONE_REAL:
        if e.shape == "vector":
            if e.field != "real":
                raise ValueError("real quadratic sampling needs real vectors")
            vectors = [np.real(a) for a in e.operators]
            e_search = lift_ensemble(e)
        else:
            vectors = _rank_one_vectors(e)
            e_search = _symmetrized(e)
    elif signal.kind == KIND_HERM_SIG:
        if e.shape == "vector":
            e_search = lift_ensemble(e)
        else:
            for op in e.operators:
                dev = np.max(np.abs(op - op.conj().T))
                if dev > 1e-10 * max(1.0, float(np.linalg.norm(op))):
                    raise ValueError("herm_sig certification needs Hermitian "
                                     "operators")
            e_search = e if e.hermitian else _hermitized(e)
    else:
        if w.ambient[0] != e.shape or w.d != e.d:
            raise ValueError("variety ambient does not match ensemble shape")

    if w.is_full_space():
        mode = _variety_mode(w)
        rows = _stacked_rows(e_search, mode)
        basis, _ = _kernel_basis(rows, cfg.kernel_cutoff)
        if basis.shape[1] == 0:
            return InjectivityVerdict(status=CERTIFIED_EXACT, tolerances=tols)
        q = _from_coords(basis[:, 0], w.ambient_shape(), mode)
        res = float(np.linalg.norm(rows @ basis[:, 0]))
        wit = Witness(element=q, residual=res, restart=0, iterations=0)
        return InjectivityVerdict(status=REFUTED_WITH_WITNESS, witness=wit,
                                  collision=witness_to_collision(q, signal),
                                  tolerances=tols)

    if signal.kind == KIND_RANK_ONE_REAL and vectors is not None and e.m <= 24:
        ok, subset = complement_property(vectors)
        if ok:
            return InjectivityVerdict(status=CERTIFIED_EXACT, tolerances=tols)
        frame = np.stack(vectors)
        comp = tuple(j for j in range(e.m) if j not in set(subset))
        u = _null_vector(frame[list(subset)], e.d)
        v = _null_vector(frame[list(comp)], e.d)
        q = np.outer(u, v)
        q = q / np.linalg.norm(q)
        res = float(np.linalg.norm(apply(e_search, q).y))
        wit = Witness(element=q, residual=res, restart=0, iterations=0)
        return InjectivityVerdict(status=REFUTED_WITH_WITNESS, witness=wit,
                                  collision=witness_to_collision(q, signal),
                                  tolerances=tols)

    result = witness_search(e_search, w, cfg)
    if result.kernel_dim == 0:
        return InjectivityVerdict(status=CERTIFIED_EXACT,
                                  restarts_used=result.restarts_used,
                                  iterations=result.iterations,
                                  tolerances=tols)
    if result.witness is not None:
        return InjectivityVerdict(
            status=REFUTED_WITH_WITNESS, witness=result.witness,
            collision=witness_to_collision(result.witness.element, signal),
            restarts_used=result.restarts_used, iterations=result.iterations,
            tolerances=tols)
    status = (NO_WITNESS_FOUND if result.margin > cfg.margin_threshold
              else INCONCLUSIVE)
    return InjectivityVerdict(status=status, margin=result.margin,
                              restarts_used=result.restarts_used,
                              iterations=result.iterations, tolerances=tols)


# ---------------------------------------------------------------------------
# minor residual and the rank-2 kernel polynomial system
# ---------------------------------------------------------------------------


def minor_residual(q, r):
    """Sum of squared magnitudes of all (r+1) x (r+1) minors of ``q``;
    zero exactly when rank(q) <= r."""
    q = np.asarray(q)
    if q.ndim != 2 or q.shape[0] != q.shape[1]:
        raise ValueError("expected a square matrix")
    r = int(r)
    if r < 0:
        raise ValueError("rank bound must be nonnegative")
    d = q.shape[0]
    size = r + 1
    if size > d:
        return 0.0
    combos = np.array(list(itertools.combinations(range(d), size)))
    batch = q[combos[:, None, :, None], combos[None, :, None, :]]
    dets = np.linalg.det(batch.reshape(-1, size, size))
    return float(np.sum(np.abs(dets) ** 2))


_MINOR_INDEX_CACHE = {}


def _minor_indices(d, size):
    """Gather/scatter index arrays for all size x size submatrices."""
    key = (d, size)
    hit = _MINOR_INDEX_CACHE.get(key)
    if hit is None:
        idx = np.array(list(itertools.combinations(range(d), size)))
        nc = idx.shape[0]
        gather = (idx[:, None, :, None] * d + idx[None, :, None, :])
        hit = (idx, gather.reshape(-1, size, size), nc)
        _MINOR_INDEX_CACHE[key] = hit
    return hit


def _minor_residual_and_grad(q, r):
    """Residual and its gradient for a real matrix (descent inner loop)."""
    d = q.shape[0]
    size = r + 1
    if size > d:
        return 0.0, np.zeros_like(q)
    _, gather, _ = _minor_indices(d, size)
    batch = q.ravel()[gather]
    dets = np.linalg.det(batch)
    f = float(np.sum(dets ** 2))
    if size == 3:
        cof = np.cross(batch[:, [1, 2, 0], :], batch[:, [2, 0, 1], :])
    elif size == 1:
        cof = np.ones_like(batch)
    else:
        cof = np.empty_like(batch)
        for k, sub in enumerate(batch):
            for i in range(size):
                for j in range(size):
                    minor = np.delete(np.delete(sub, i, 0), j, 1)
                    cof[k, i, j] = (-1) ** (i + j) * np.linalg.det(minor)
    contrib = 2.0 * dets[:, None, None] * cof
    grad = np.bincount(gather.ravel(), weights=contrib.ravel(),
                       minlength=d * d).reshape(d, d)
    return f, grad


def _sphere_descent(fg, t, max_iters):
    """Projected gradient descent with backtracking on the unit sphere."""
    f, g = fg(t)
    for _ in range(max_iters):
        g_tan = g - (g @ t) * t
        gn2 = float(g_tan @ g_tan)
        if gn2 <= 1e-36:
            break
        eta = min(1.0, 2.0 * max(f, 1e-300) / gn2)
        accepted = False
        for _ in range(60):
            t_new = t - eta * g_tan
            t_new = t_new / np.linalg.norm(t_new)
            f_new, g_new = fg(t_new)
            if f_new <= f - 1e-4 * eta * gn2:
                t, f, g = t_new, f_new, g_new
                accepted = True
                break
            eta *= 0.5
        if not accepted or f <= 1e-32:
            break
    return t, f


def verify_kernel_minor_system(e, restarts=500, max_iters=250, seed=0, r=2,
                               kernel_cutoff=1e-10):
    """Minimize the rank-``r`` minor residual over the unit sphere of
    ker(sampling map) by seeded multistart descent.

    A minimum indistinguishable from zero exhibits a bounded-rank kernel
    element; a clearly positive minimum is numerical evidence that the
    kernel meets the rank variety only at zero.  Returns the sentinel
    ``(inf, None)`` when the kernel is trivial.
    """
    if e.shape != "matrix" or e.field != "real":
        raise ValueError("expected a real matrix ensemble")
    rows = _stacked_rows(e, "real")
    basis, _ = _kernel_basis(rows, kernel_cutoff)
    kdim = basis.shape[1]
    if kdim == 0:
        return MinorSystemResult(min_residual=math.inf, argmin=None, restarts=0)
    d = e.d

    def fg(t):
        q = (basis @ t).reshape(d, d)
        f, grad = _minor_residual_and_grad(q, r)
        return f, basis.T @ grad.ravel()

    best_f, best_t = math.inf, None
    for ridx in range(restarts):
        rng = derived_rng(seed, _STREAM_MINOR, ridx)
        t = rng.standard_normal(kdim)
        t = t / np.linalg.norm(t)
        t, f = _sphere_descent(fg, t, max_iters)
        if f < best_f:
            best_f, best_t = f, t
    t, f = _sphere_descent(fg, best_t, 10 * max_iters)
    if f < best_f:
        best_f, best_t = f, t
    argmin = (basis @ best_t).reshape(d, d)
    return MinorSystemResult(min_residual=float(best_f), argmin=argmin,
                             restarts=restarts)


# ---------------------------------------------------------------------------
# admissibility probe
# ---------------------------------------------------------------------------


def admissibility_probe(variety_sampler, functional, n_samples, seed=0):
    """Sample the variety and evaluate ``l(X) = Tr(functional X^T)``.

    Returns ``non_degenerate`` with the first sample where the functional
    clearly does not vanish, otherwise ``vanishes_on_all_samples`` (the
    probe's evidence that the whole variety sits inside the hyperplane).
    """
    functional = np.asarray(functional)
    nf = float(np.linalg.norm(functional))
    if nf == 0.0:
        raise ValueError("functional must be nonzero")
    rng = derived_rng(seed, _STREAM_PROBE)
    for i in range(int(n_samples)):
        x = variety_sampler(rng)
        val = complex(np.sum(functional * x))
        if abs(val) > 1e-10 * float(np.linalg.norm(x)) * nf:
            return ProbeResult(status=NON_DEGENERATE, sample=x, value=val,
                               samples_checked=i + 1)
    return ProbeResult(status=VANISHES_ON_ALL_SAMPLES,
                       samples_checked=int(n_samples))


def symmetric_sampler(d, field="complex"):
    """Sampler of random symmetric d x d matrices, ``G + G^T``."""
    def sample(rng):
        g = rng.standard_normal((d, d))
        if field == "complex":
            g = g + 1j * rng.standard_normal((d, d))
        return g + g.T
    return sample


def dense_sampler(d, field="complex"):
    """Sampler of unconstrained random d x d matrices."""
    def sample(rng):
        g = rng.standard_normal((d, d))
        if field == "complex":
            g = g + 1j * rng.standard_normal((d, d))
        return g
    return sample
