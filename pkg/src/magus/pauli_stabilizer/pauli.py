"""n-qubit Pauli operators with phase tracking.

The internal convention stores an operator as ``i^v * X^x Z^z`` where
``x``/``z`` are bit arrays over the qubits and ``v`` is an integer power
of ``i`` modulo 4.  ``Y`` contributes ``(x=1, z=1, v+=1)`` since
``Y = i X Z``.  Hermitian operators satisfy ``v == x.z (mod 2)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

import numpy as np

_MAT_I = np.eye(2, dtype=complex)
_MAT_X = np.array([[0, 1], [1, 0]], dtype=complex)
_MAT_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
_MAT_Z = np.array([[1, 0], [0, -1]], dtype=complex)

PAULI_MATRICES = {"I": _MAT_I, "X": _MAT_X, "Y": _MAT_Y, "Z": _MAT_Z}

_PHASES = {0: 1.0 + 0j, 1: 1j, 2: -1.0 + 0j, 3: -1j}

_TOKEN_RE = re.compile(r"^([IXYZ])(\d+)$")


@dataclass
class PauliOperator:
    """A Pauli operator ``i^phase_power * prod_j X_j^{x[j]} Z_j^{z[j]}``."""

    x: np.ndarray
    z: np.ndarray
    phase_power: int = 0

    def __post_init__(self):
        self.x = np.asarray(self.x, dtype=np.uint8) % 2
        self.z = np.asarray(self.z, dtype=np.uint8) % 2
        if self.x.shape != self.z.shape or self.x.ndim != 1:
            raise ValueError("x and z must be equal-length bit vectors")
        self.phase_power = int(self.phase_power) % 4

    # -- constructors -------------------------------------------------
    @classmethod
    def identity(cls, n: int) -> "PauliOperator":
        return cls(np.zeros(n, dtype=np.uint8), np.zeros(n, dtype=np.uint8))

    @classmethod
    def single(cls, n: int, kind: str, qubit: int) -> "PauliOperator":
        op = cls.identity(n)
        if not 0 <= qubit < n:
            raise IndexError(f"qubit {qubit} out of range for n={n}")
        if kind == "X":
            op.x[qubit] = 1
        elif kind == "Z":
            op.z[qubit] = 1
        elif kind == "Y":
            op.x[qubit] = 1
            op.z[qubit] = 1
            op.phase_power = 1
        elif kind != "I":
            raise ValueError(f"unknown Pauli letter {kind!r}")
        return op

    @classmethod
    def from_label(cls, label: str, n: int | None = None) -> "PauliOperator":
        """Parse labels like ``"Z0 X2"`` (letter + qubit index tokens)."""
        tokens = label.split()
        sign = 1
        if tokens and tokens[0] in ("+", "-"):
            sign = -1 if tokens[0] == "-" else 1
            tokens = tokens[1:]
        parsed = []
        for tok in tokens:
            m = _TOKEN_RE.match(tok)
            if m is None:
                raise ValueError(f"bad Pauli token {tok!r}")
            parsed.append((m.group(1), int(m.group(2))))
        size = n if n is not None else (max((q for _, q in parsed), default=-1) + 1)
        op = cls.identity(max(size, 1) if size == 0 else size)
        for letter, q in parsed:
            if q >= op.n:
                raise ValueError(f"qubit {q} out of range for n={op.n}")
            single = cls.single(op.n, letter, q)
            if op.x[q] or op.z[q]:
                raise ValueError(f"duplicate qubit {q} in Pauli label")
            op.x ^= single.x
            op.z ^= single.z
            op.phase_power = (op.phase_power + single.phase_power) % 4
        if sign < 0:
            op.phase_power = (op.phase_power + 2) % 4
        return op

    # -- properties ----------------------------------------------------
    @property
    def n(self) -> int:
        return self.x.size

    @property
    def phase(self) -> complex:
        return _PHASES[self.phase_power]

    @property
    def weight(self) -> int:
        return int(np.count_nonzero(self.x | self.z))

    def is_hermitian(self) -> bool:
        return (self.phase_power - int(np.dot(self.x, self.z))) % 2 == 0

    def is_identity(self) -> bool:
        return self.weight == 0 and self.phase_power == 0

    # -- algebra -------------------------------------------------------
    def commutes_with(self, other: "PauliOperator") -> bool:
        sym = (np.dot(self.x, other.z) + np.dot(self.z, other.x)) % 2
        return sym == 0

    def matrix(self) -> np.ndarray:
        out = np.array([[self.phase]])
        for xq, zq in zip(self.x, self.z):
            m = _MAT_I
            if xq and zq:
                m = _MAT_X @ _MAT_Z
            elif xq:
                m = _MAT_X
            elif zq:
                m = _MAT_Z
            out = np.kron(out, m)
        return out

    def label(self) -> str:
        letters = []
        for q in range(self.n):
            if self.x[q] and self.z[q]:
                letters.append(f"Y{q}")
            elif self.x[q]:
                letters.append(f"X{q}")
            elif self.z[q]:
                letters.append(f"Z{q}")
        body = " ".join(letters) if letters else "I"
        ys = int(np.dot(self.x, self.z))
        head = (self.phase_power - ys) % 4
        return {0: "", 1: "i ", 2: "- ", 3: "-i "}[head] + body

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"PauliOperator({self.label()!r}, n={self.n})"
