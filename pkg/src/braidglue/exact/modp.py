"""Dense linear algebra over a prime field F_p with numpy int64 arrays.

All functions take and return arrays with entries in [0, p).  Products use
float64 BLAS when every partial sum stays below 2^53, and exact int64 or
Python integers otherwise.

>>> import numpy as np
>>> rank(np.array([[1, 2], [2, 4]]), 7)
1
>>> charpoly(np.array([[0, 1], [1, 0]]), 5)   # x^2 - 1
[1, 0, 4]
"""

from __future__ import annotations

import numpy as np

_FLOAT_EXACT = 2**53
_INT_EXACT = 2**62


def asmod(A, p):
    return np.asarray(A, dtype=np.int64) % p


def matmul(A, B, p):
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    inner = A.shape[-1] if A.ndim else 1
    bound = max(inner, 1) * (p - 1) ** 2
    if bound < _FLOAT_EXACT:
        C = np.matmul(A.astype(np.float64), B.astype(np.float64))
        return np.mod(C, p).astype(np.int64)
    if bound < _INT_EXACT:
        return np.matmul(A, B) % p
    C = np.matmul(A.astype(object), B.astype(object)) % p
    return C.astype(np.int64)


def inv_scalar(a, p):
    a = int(a) % p
    if a == 0:
        raise ZeroDivisionError("inverse of zero in F_p")
    return pow(a, p - 2, p)


def rref(A, p):
    """(R, pivots): reduced row echelon form with zero rows removed."""
    R = asmod(A, p).copy()
    if R.ndim != 2:
        raise ValueError("rref needs a 2-dimensional array")
    m, n = R.shape
    pivots = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            R[[r, k]] = R[[k, r]]
        R[r] = (R[r] * inv_scalar(R[r, c], p)) % p
        col = R[:, c].copy()
        col[r] = 0
        rows = np.nonzero(col)[0]
        if rows.size:
            R[rows] = (R[rows] - np.outer(col[rows], R[r])) % p
        pivots.append(c)
        r += 1
    return R[:r], pivots


def rank(A, p):
    A = np.asarray(A)
    if A.size == 0:
        return 0
    return len(rref(A, p)[1])


def nullspace(A, p):
    """Rows spanning {x : A x = 0}, in reduced echelon form."""
    A = asmod(A, p)
    n = A.shape[1]
    if A.shape[0] == 0:
        return np.eye(n, dtype=np.int64)
    R, piv = rref(A, p)
    free = [j for j in range(n) if j not in set(piv)]
    N = np.zeros((len(free), n), dtype=np.int64)
    for k, f in enumerate(free):
        N[k, f] = 1
        for r, c in enumerate(piv):
            N[k, c] = (-R[r, f]) % p
    if N.shape[0]:
        N, _ = rref(N, p)
    return N


def left_nullspace(A, p):
    """Rows spanning {y : y A = 0}."""
    return nullspace(np.asarray(A).T, p)


def row_basis(vectors, p, n=None):
    """Reduced echelon basis of the span of the given row vectors."""
    V = np.asarray(vectors, dtype=np.int64)
    if V.size == 0:
        return np.zeros((0, n if n is not None else (V.shape[1] if V.ndim == 2 else 0)), dtype=np.int64)
    return rref(V, p)[0]


def inverse(A, p):
    A = asmod(A, p)
    n = A.shape[0]
    aug = np.concatenate([A, np.eye(n, dtype=np.int64)], axis=1)
    R, piv = rref(aug, p)
    if len(piv) < n or piv[n - 1] != n - 1:
        raise ZeroDivisionError("singular matrix over F_p")
    return R[:, n:]


def solve(A, B, p):
    """X with A X = B, or None."""
    A = asmod(A, p)
    B = asmod(B, p)
    if B.ndim == 1:
        B = B[:, None]
    n = A.shape[1]
    aug = np.concatenate([A, B], axis=1)
    R, piv = rref(aug, p)
    if piv and piv[-1] >= n:
        return None
    X = np.zeros((n, B.shape[1]), dtype=np.int64)
    for r, c in enumerate(piv):
        X[c] = R[r, n:]
    return X


def hessenberg(A, p):
    """Upper Hessenberg matrix similar to A over F_p."""
    H = asmod(A, p).copy()
    n = H.shape[0]
    for c in range(n - 2):
        nz = np.nonzero(H[c + 1 :, c])[0]
        if nz.size == 0:
            continue
        k = c + 1 + int(nz[0])
        if k != c + 1:
            H[[c + 1, k]] = H[[k, c + 1]]
            H[:, [c + 1, k]] = H[:, [k, c + 1]]
        inv = inv_scalar(H[c + 1, c], p)
        for r in range(c + 2, n):
            f = (H[r, c] * inv) % p
            if f:
                H[r] = (H[r] - f * H[c + 1]) % p
                H[:, c + 1] = (H[:, c + 1] + f * H[:, r]) % p
    return H


def charpoly(A, p):
    """Characteristic polynomial, highest degree first (monic)."""
    H = hessenberg(A, p)
    n = H.shape[0]
    polys = [[1]]  # polys[k] = charpoly of leading k x k block, highest first
    for k in range(1, n + 1):
        # P_k = (x - h_kk) P_{k-1} - sum_{i<k} h_ik prod_{j=i+1..k} h_{j,j-1} P_{i-1}
        prev = polys[k - 1]
        h = int(H[k - 1, k - 1])
        cur = [(a - h * b) % p for a, b in zip(list(prev) + [0], [0] + list(prev))]
        prod = 1
        for i in range(k - 1, 0, -1):
            prod = (prod * int(H[i, i - 1])) % p
            if prod == 0:
                break
            coef = (prod * int(H[i - 1, k - 1])) % p
            if coef:
                base = polys[i - 1]
                pad = len(cur) - len(base)
                for t, b in enumerate(base):
                    cur[pad + t] = (cur[pad + t] - coef * b) % p
        polys.append(cur)
    return polys[n]


def poly_at_matrix(coeffs, A, p):
    """f(A) by Horner; coeffs highest degree first."""
    A = asmod(A, p)
    n = A.shape[0]
    out = np.zeros((n, n), dtype=np.int64)
    ident = np.eye(n, dtype=np.int64)
    for c in coeffs:
        out = (matmul(out, A, p) + int(c) * ident) % p
    return out
