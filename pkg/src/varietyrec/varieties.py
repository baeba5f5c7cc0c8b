"""Variety descriptors, dimension formulas, difference closures, projections.

The constraint sets handled here are cones cut out by polynomial
conditions: sparse vectors, bounded-rank matrices, bounded-rank complex
symmetric matrices, Hermitian matrices of signature at most (1,1), and
real rank-one matrices.  The last two double as their own difference
cones: every difference of two rank-one Hermitian PSD lifts xx* - yy*
has at most one positive and one negative eigenvalue, and every
difference of real quadratic-form lifts is seen by symmetric operators
through a single rank-one matrix (x-y)(x+y)^T / 4.

All operations are pure functions; arrays are never mutated.
"""

import dataclasses

import numpy as np

KIND_SPARSE = "sparse"
KIND_LOW_RANK = "low_rank"
KIND_SYM_LOW_RANK = "sym_low_rank"
KIND_HERM_SIG = "herm_sig"
KIND_RANK_ONE_REAL = "rank_one_real"

_KINDS = (KIND_SPARSE, KIND_LOW_RANK, KIND_SYM_LOW_RANK, KIND_HERM_SIG,
          KIND_RANK_ONE_REAL)
_FIELDS = ("real", "complex")

# kinds usable as signal constraint sets (sym_low_rank only constrains
# measurement operators)
SIGNAL_KINDS = (KIND_SPARSE, KIND_LOW_RANK, KIND_HERM_SIG, KIND_RANK_ONE_REAL)


def dim_sparse(d, k):
    """Dimension of the set of k-sparse vectors in dimension d."""
    d, k = int(d), int(k)
    if d < 1 or not 0 <= k <= d:
        raise ValueError(f"need 0 <= k <= d, got d={d}, k={k}")
    return k


def dim_low_rank(d, r):
    """Dimension 2dr - r^2 of the d x d matrices of rank <= r."""
    d, r = int(d), int(r)
    if d < 1 or not 0 <= r <= d:
        raise ValueError(f"need 0 <= r <= d, got d={d}, r={r}")
    return 2 * d * r - r * r


def dim_complex_symmetric(d, r):
    """Dimension dr - r(r-1)/2 of complex symmetric d x d matrices of rank <= r."""
    d, r = int(d), int(r)
    if d < 1 or not 0 <= r <= d:
        raise ValueError(f"need 0 <= r <= d, got d={d}, r={r}")
    return d * r - r * (r - 1) // 2


@dataclasses.dataclass(frozen=True)
class VarietySpec:
    """Descriptor of a constraint set for signals or measurement operators.

    Fields
    ------
    kind : one of ``sparse``, ``low_rank``, ``sym_low_rank``, ``herm_sig``,
        ``rank_one_real``
    d : ambient size (vectors of length d, or d-by-d matrices)
    param : sparsity k or rank bound r; fixed to 2 for ``herm_sig`` and
        1 for ``rank_one_real``
    field : ``real`` or ``complex``
    """

    kind: str
    d: int
    param: int
    field: str

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.field not in _FIELDS:
            raise ValueError(f"unknown field {self.field!r}")
        if self.d < 1:
            raise ValueError("d must be positive")
        if not 0 <= self.param <= self.d:
            raise ValueError(f"parameter {self.param} out of range [0, {self.d}]")
        if self.kind == KIND_HERM_SIG:
            if self.field != "complex" or self.param != min(2, self.d):
                raise ValueError("herm_sig is complex with rank bound min(2, d)")
        if self.kind == KIND_RANK_ONE_REAL:
            if self.field != "real" or self.param != min(1, self.d):
                raise ValueError("rank_one_real is real with rank bound 1")

    # -- constructors ---------------------------------------------------

    @classmethod
    def sparse(cls, d, k, field="real"):
        return cls(KIND_SPARSE, int(d), int(k), field)

    @classmethod
    def low_rank(cls, d, r, field="complex"):
        return cls(KIND_LOW_RANK, int(d), int(r), field)

    @classmethod
    def sym_low_rank(cls, d, r, field="complex"):
        return cls(KIND_SYM_LOW_RANK, int(d), int(r), field)

    @classmethod
    def herm_sig(cls, d):
        return cls(KIND_HERM_SIG, int(d), min(2, int(d)), "complex")

    @classmethod
    def rank_one_real(cls, d):
        return cls(KIND_RANK_ONE_REAL, int(d), min(1, int(d)), "real")

    # -- geometry --------------------------------------------------------

    @property
    def ambient(self):
        """``('vector', d)`` or ``('matrix', d)``."""
        if self.kind == KIND_SPARSE:
            return ("vector", self.d)
        return ("matrix", self.d)

    def ambient_shape(self):
        kind, d = self.ambient
        return (d,) if kind == "vector" else (d, d)

    def dimension(self):
        """Dimension of the variety (complex count for complex kinds;
        the real locus has the same dimension for every kind here)."""
        if self.kind == KIND_SPARSE:
            return dim_sparse(self.d, self.param)
        if self.kind == KIND_LOW_RANK:
            return dim_low_rank(self.d, self.param)
        if self.kind == KIND_SYM_LOW_RANK:
            return dim_complex_symmetric(self.d, self.param)
        if self.kind == KIND_HERM_SIG:
            return dim_low_rank(self.d, min(2, self.d))
        return dim_low_rank(self.d, min(1, self.d))  # rank_one_real

    def is_full_space(self):
        """True when the constraint set fills its ambient space."""
        if self.kind == KIND_SPARSE:
            return self.param >= self.d
        if self.kind == KIND_LOW_RANK:
            return self.param >= self.d
        return False

    # -- serialization ---------------------------------------------------

    def to_json(self):
        return {"kind": self.kind, "d": self.d, "k_or_r": self.param,
                "field": self.field}

    @classmethod
    def from_json(cls, obj):
        return cls(obj["kind"], int(obj["d"]), int(obj["k_or_r"]), obj["field"])


def difference_closure(w):
    """Smallest descriptor containing all differences of two members of ``w``.

    Sparse sparsity doubles, rank bounds double (both clipped at d); the
    lifted phase-retrieval cones are already closed under differences.
    """
    if w.kind == KIND_SPARSE:
        return VarietySpec.sparse(w.d, min(2 * w.param, w.d), w.field)
    if w.kind == KIND_LOW_RANK:
        return VarietySpec.low_rank(w.d, min(2 * w.param, w.d), w.field)
    if w.kind == KIND_HERM_SIG:
        return w
    if w.kind == KIND_RANK_ONE_REAL:
        return w
    raise ValueError(f"{w.kind} is not a signal variety")


def _check_shape(x, w):
    if x.shape != w.ambient_shape():
        raise ValueError(f"shape {x.shape} does not match ambient {w.ambient}")


def project(x, w):
    """Metric (Frobenius/Euclidean) projection of ``x`` onto ``w``.

    Sparse: keep the ``k`` largest-magnitude entries, ties broken by
    lowest index.  low_rank / rank_one_real: truncated SVD with singular
    values in descending order.  herm_sig: hermitize, then keep the
    single largest positive and single most-negative eigenvalue.
    """
    x = np.asarray(x)
    if not np.all(np.isfinite(x.real)) or not np.all(np.isfinite(x.imag)):
        raise ValueError("non-finite input")
    _check_shape(x, w)

    if w.kind == KIND_SPARSE:
        k = w.param
        out = np.zeros_like(x)
        if k > 0:
            order = np.argsort(-np.abs(x), kind="stable")
            keep = order[:k]
            out[keep] = x[keep]
        return out

    if w.kind in (KIND_LOW_RANK, KIND_RANK_ONE_REAL):
        r = w.param
        xm = x.real if w.field == "real" else x
        if r == 0:
            return np.zeros_like(xm)
        u, s, vh = np.linalg.svd(xm, full_matrices=False)
        return (u[:, :r] * s[:r]) @ vh[:r]

    if w.kind == KIND_HERM_SIG:
        h = 0.5 * (x + x.conj().T).astype(complex)
        vals, vecs = np.linalg.eigh(h)
        out = np.zeros_like(h)
        ip = int(np.argmax(vals))
        if vals[ip] > 0:
            u = vecs[:, ip]
            out += vals[ip] * np.outer(u, u.conj())
        im = int(np.argmin(vals))
        if vals[im] < 0:
            u = vecs[:, im]
            out += vals[im] * np.outer(u, u.conj())
        return out

    raise ValueError(f"no metric projection for kind {w.kind!r}")


def membership(x, w, tol=1e-8):
    """Decide membership of ``x`` in ``w`` within a relative tolerance.

    The residual tested is the (r+1)-th singular value, the (k+1)-th
    entry magnitude, or the eigenvalue/symmetry excess, all compared
    against ``tol * ||x||``.
    """
    x = np.asarray(x)
    _check_shape(x, w)
    nrm = float(np.linalg.norm(x))
    if nrm == 0.0:
        return True
    thresh = tol * nrm

    if w.kind == KIND_SPARSE:
        if w.param >= x.size:
            return True
        mags = np.sort(np.abs(x))[::-1]
        return bool(mags[w.param] <= thresh)

    if w.kind in (KIND_LOW_RANK, KIND_RANK_ONE_REAL, KIND_SYM_LOW_RANK):
        if w.field == "real" and np.linalg.norm(np.imag(x)) > thresh:
            return False
        if w.kind == KIND_SYM_LOW_RANK and np.linalg.norm(x - x.T) > thresh:
            return False
        r = w.param
        if r >= w.d:
            return True
        s = np.linalg.svd(x, compute_uv=False)
        return bool(s[r] <= thresh)

    if w.kind == KIND_HERM_SIG:
        if np.linalg.norm(x - np.asarray(x).conj().T) > thresh:
            return False
        vals = np.linalg.eigvalsh(0.5 * (x + np.asarray(x).conj().T))
        n_pos = int(np.sum(vals > thresh))
        n_neg = int(np.sum(vals < -thresh))
        return n_pos <= 1 and n_neg <= 1

    raise ValueError(f"unknown kind {w.kind!r}")
