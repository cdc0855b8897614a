"""Destabilizer/stabilizer tableau simulation of Clifford circuits.

Rows 0..n-1 hold destabilizer generators and rows n..2n-1 stabilizer
generators.  Each row encodes a Pauli ``(-1)^r * prod_j sigma(x_j, z_j)``
with ``sigma(1,1) = Y``.  Gate updates and measurement follow the
Aaronson-Gottesman scheme, with measurement generalized from single-qubit
Z to an arbitrary Hermitian Pauli.
"""

from __future__ import annotations

import numpy as np

from .pauli import PauliOperator

CLIFFORD_GATES = ("H", "S", "SDG", "X", "Y", "Z", "CNOT", "CZ")


def _g_exponents(x1, z1, x2, z2):
    """Power of i picked up per qubit when multiplying sigma1 * sigma2."""
    x1 = x1.astype(np.int8)
    z1 = z1.astype(np.int8)
    x2 = x2.astype(np.int8)
    z2 = z2.astype(np.int8)
    out = np.zeros_like(x1)
    m = (x1 == 1) & (z1 == 1)
    out[m] = (z2 - x2)[m]
    m = (x1 == 1) & (z1 == 0)
    out[m] = (z2 * (2 * x2 - 1))[m]
    m = (x1 == 0) & (z1 == 1)
    out[m] = (x2 * (1 - 2 * z2))[m]
    return out


class StabilizerTableau:
    """Tableau of a pure stabilizer state on ``n`` qubits."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("need at least one qubit")
        self.n = n
        self.x = np.zeros((2 * n, n), dtype=np.uint8)
        self.z = np.zeros((2 * n, n), dtype=np.uint8)
        self.r = np.zeros(2 * n, dtype=np.uint8)
        idx = np.arange(n)
        self.x[idx, idx] = 1          # destabilizers X_i
        self.z[n + idx, idx] = 1      # stabilizers Z_i

    def copy(self) -> "StabilizerTableau":
        t = StabilizerTableau.__new__(StabilizerTableau)
        t.n = self.n
        t.x = self.x.copy()
        t.z = self.z.copy()
        t.r = self.r.copy()
        return t

    # -- gate updates ---------------------------------------------------
    def _check(self, *qubits):
        for q in qubits:
            if not 0 <= q < self.n:
                raise IndexError(f"qubit {q} out of range for n={self.n}")
        if len(set(qubits)) != len(qubits):
            raise IndexError("gate qubits must be distinct")

    def h(self, q: int):
        self._check(q)
        self.r ^= self.x[:, q] & self.z[:, q]
        self.x[:, q], self.z[:, q] = self.z[:, q].copy(), self.x[:, q].copy()

    def s(self, q: int):
        self._check(q)
        self.r ^= self.x[:, q] & self.z[:, q]
        self.z[:, q] ^= self.x[:, q]

    def sdg(self, q: int):
        self._check(q)
        self.r ^= self.x[:, q] & (1 ^ self.z[:, q])
        self.z[:, q] ^= self.x[:, q]

    def x_gate(self, q: int):
        self._check(q)
        self.r ^= self.z[:, q]

    def y_gate(self, q: int):
        self._check(q)
        self.r ^= self.x[:, q] ^ self.z[:, q]

    def z_gate(self, q: int):
        self._check(q)
        self.r ^= self.x[:, q]

    def cnot(self, c: int, t: int):
        self._check(c, t)
        self.r ^= self.x[:, c] & self.z[:, t] & (self.x[:, t] ^ self.z[:, c] ^ 1)
        self.x[:, t] ^= self.x[:, c]
        self.z[:, c] ^= self.z[:, t]

    def cz(self, a: int, b: int):
        self._check(a, b)
        self.r ^= self.x[:, a] & self.x[:, b] & (self.z[:, a] ^ self.z[:, b])
        self.z[:, a] ^= self.x[:, b]
        self.z[:, b] ^= self.x[:, a]

    def apply(self, name: str, *qubits: int) -> "StabilizerTableau":
        table = {
            "H": self.h, "S": self.s, "SDG": self.sdg,
            "X": self.x_gate, "Y": self.y_gate, "Z": self.z_gate,
            "CNOT": self.cnot, "CZ": self.cz,
        }
        if name not in table:
            raise ValueError(f"not a Clifford gate: {name!r}")
        table[name](*qubits)
        return self

    # -- internal row algebra --------------------------------------------
    def _rowsum(self, h: int, i: int):
        """row_h := row_i * row_h with phase bookkeeping."""
        phase = 2 * int(self.r[h]) + 2 * int(self.r[i]) + int(
            _g_exponents(self.x[i], self.z[i], self.x[h], self.z[h]).sum()
        )
        self.r[h] = (phase % 4) // 2
        self.x[h] ^= self.x[i]
        self.z[h] ^= self.z[i]

    def _pauli_row_form(self, pauli: PauliOperator):
        if pauli.n != self.n:
            raise ValueError("Pauli size does not match tableau")
        if not pauli.is_hermitian():
            raise ValueError("can only measure Hermitian Paulis")
        ys = int(np.dot(pauli.x, pauli.z))
        rp = ((pauli.phase_power - ys) % 4) // 2
        return pauli.x.astype(np.uint8), pauli.z.astype(np.uint8), rp

    def _anticommute_mask(self, px, pz):
        return (self.x @ pz.astype(np.int64) + self.z @ px.astype(np.int64)) % 2

    # -- measurement ------------------------------------------------------
    def expectation(self, pauli: PauliOperator) -> int:
        """Expectation of a Hermitian Pauli: +1, -1, or 0 (random outcome)."""
        px, pz, rp = self._pauli_row_form(pauli)
        ac = self._anticommute_mask(px, pz)
        if ac[self.n:].any():
            return 0
        sx = np.zeros(self.n, dtype=np.uint8)
        sz = np.zeros(self.n, dtype=np.uint8)
        phase = 0
        for i in range(self.n):
            if ac[i]:
                row = self.n + i
                phase += 2 * int(self.r[row]) + int(
                    _g_exponents(self.x[row], self.z[row], sx, sz).sum()
                )
                sx ^= self.x[row]
                sz ^= self.z[row]
        if not (np.array_equal(sx, px) and np.array_equal(sz, pz)):
            raise RuntimeError("Pauli not in stabilizer span; tableau corrupt")
        return 1 if (phase % 4) // 2 == rp else -1

    def measure(self, pauli: PauliOperator, rng: np.random.Generator) -> int:
        """Measure a Hermitian Pauli, collapsing the state if needed."""
        det = self.expectation(pauli)
        if det != 0:
            return det
        px, pz, rp = self._pauli_row_form(pauli)
        ac = self._anticommute_mask(px, pz)
        p = self.n + int(np.nonzero(ac[self.n:])[0][0])
        for k in range(2 * self.n):
            if k != p and ac[k]:
                self._rowsum(k, p)
        self.x[p - self.n] = self.x[p]
        self.z[p - self.n] = self.z[p]
        self.r[p - self.n] = self.r[p]
        outcome = 1 if rng.random() < 0.5 else -1
        self.x[p] = px
        self.z[p] = pz
        self.r[p] = rp ^ (outcome < 0)
        return outcome

    # -- diagnostics --------------------------------------------------------
    def symplectic_rank(self) -> int:
        """GF(2) rank of the full (x|z) tableau; 2n for a valid tableau."""
        m = np.concatenate([self.x, self.z], axis=1).astype(np.uint8) % 2
        m = m.copy()
        rank = 0
        rows, cols = m.shape
        for c in range(cols):
            pivot = None
            for rr in range(rank, rows):
                if m[rr, c]:
                    pivot = rr
                    break
            if pivot is None:
                continue
            m[[rank, pivot]] = m[[pivot, rank]]
            for rr in range(rows):
                if rr != rank and m[rr, c]:
                    m[rr] ^= m[rank]
            rank += 1
        return rank

    def stabilizer_labels(self) -> list[str]:
        out = []
        for i in range(self.n, 2 * self.n):
            letters = []
            for q in range(self.n):
                letters.append("IXZY"[self.x[i, q] + 2 * self.z[i, q]])
            out.append(("-" if self.r[i] else "+") + "".join(letters))
        return out
