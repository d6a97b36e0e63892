"""
Integer normal forms with unimodular transforms

scikit-toric-heights developers
Copyright (c) 2026. All rights reserved.
"""
from numpy import array, eye
from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import (
    smith_normal_decomp as _snd,
    hermite_normal_form as _hnf,
)

from skth.utility.exceptions import NotPrimitiveError

__all__ = [
    "smith_normal_form",
    "hermite_normal_form",
    "integer_kernel",
    "right_inverse",
]


def _int_rows(A):
    rows = [[int(a) for a in row] for row in (A.tolist() if hasattr(A, "tolist") else A)]
    if len({len(r) for r in rows}) > 1:
        raise ValueError("expected a 2d integer matrix")
    return rows


def _to_domain(rows, n):
    return DomainMatrix([[ZZ(a) for a in row] for row in rows], (len(rows), n), ZZ)


def _to_array(M):
    return array([[int(a) for a in row] for row in M.to_list()], dtype=object).reshape(M.shape)


def _unimodular_inverse(M):
    if M.shape[0] == 0:
        return M
    return M.convert_to(QQ).inv().convert_to(ZZ)


def smith_normal_form(A):
    """
    Smith normal form of an integer matrix.

    Parameters
    ----------
    A : array-like
        Integer matrix of shape (m, n).

    Returns
    -------
    U : numpy.ndarray
        Unimodular (m, m) object array.
    D : numpy.ndarray
        (m, n) object array, diagonal with non-negative entries, each
        diagonal entry dividing the next.
    V : numpy.ndarray
        Unimodular (n, n) object array, with `U @ A @ V = D`.
    Uinv : numpy.ndarray
        Inverse of `U`.
    Vinv : numpy.ndarray
        Inverse of `V`.
    """
    rows = _int_rows(A)
    m = len(rows)
    n = len(rows[0]) if rows else 0
    if m == 0 or n == 0:
        Im, In = eye(m, dtype=object), eye(n, dtype=object)
        return Im, array(rows, dtype=object).reshape((m, n)), In, Im.copy(), In.copy()

    D, U, V = _snd(_to_domain(rows, n))
    return (
        _to_array(U),
        _to_array(D),
        _to_array(V),
        _to_array(_unimodular_inverse(U)),
        _to_array(_unimodular_inverse(V)),
    )


def hermite_normal_form(A):
    """
    Row-style Hermite normal form of an integer matrix.

    Parameters
    ----------
    A : array-like
        Integer matrix of shape (m, n).

    Returns
    -------
    H : numpy.ndarray
        (m, n) object array in row echelon form, with positive pivots and
        entries above each pivot reduced into `[0, pivot)`. Zero rows last.
    W : numpy.ndarray
        Unimodular (m, m) object array with `W @ A = H`.
    Winv : numpy.ndarray
        Inverse of `W`.

    Notes
    -----
    sympy computes the column-style form, pivots bottom right. The row-style
    form of `B = [A | I]` is that of the transposed, column-reversed `B`,
    read back reversed in both axes. `B` has full row rank, so its form is
    `[H | W]` with the zero rows of `H` last.
    """
    rows = _int_rows(A)
    m = len(rows)
    n = len(rows[0]) if rows else 0
    if m == 0:
        return array([], dtype=object).reshape((0, n)), eye(0, dtype=object), eye(0, dtype=object)

    aug = [row + [int(i == j) for j in range(m)] for i, row in enumerate(rows)]
    width = n + m
    flipped = _to_domain([[aug[i][k] for i in range(m)] for k in reversed(range(width))], m)

    full = _to_array(_hnf(flipped)).T[::-1, ::-1].copy()
    H, W = full[:, :n].copy(), full[:, n:].copy()
    Winv = _to_array(_unimodular_inverse(_to_domain(W.tolist(), m)))
    return H, W, Winv


def integer_kernel(A):
    """
    Saturated integer basis of the right kernel of an integer matrix.

    Returns
    -------
    K : numpy.ndarray
        Object array whose rows form a basis of `{x : A @ x = 0}`, in Hermite
        normal form.
    """
    rows = _int_rows(A)
    n = len(rows[0]) if rows else 0
    _, D, V, _, _ = smith_normal_form(rows)
    rank = sum(1 for k in range(min(D.shape)) if D[k, k] != 0)
    basis = V[:, rank:].T
    if basis.shape[0] == 0:
        return basis.reshape((0, n))
    H, _, _ = hermite_normal_form(basis)
    return H


def right_inverse(B):
    """
    Integer right inverse of a saturated full-row-rank integer matrix.

    Parameters
    ----------
    B : array-like
        (r, n) integer matrix whose Smith invariants are all 1.

    Returns
    -------
    L : numpy.ndarray
        (n, r) object array with `B @ L = I`.
    """
    rows = _int_rows(B)
    r = len(rows)
    n = len(rows[0]) if rows else 0
    if r == 0:
        return eye(n, dtype=object)[:, :0]
    U, D, V, _, _ = smith_normal_form(rows)
    if any(D[k, k] != 1 for k in range(r)):
        raise NotPrimitiveError("matrix rows do not span a saturated sublattice")
    # B = Uinv [I 0] Vinv, so B (V[:, :r] U) = I
    return V[:, :r] @ U
