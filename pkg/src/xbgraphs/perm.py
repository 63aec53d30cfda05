"""Permutations of the flat vertex set, stored as image arrays."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

__all__ = ["Perm"]


@dataclass(frozen=True, eq=False)
class Perm:
    """A bijection of ``range(degree)``; ``images[x]`` is the image of ``x``.

    Products compose right to left, so ``(p * q)(x) == p(q(x))``.
    """

    images: np.ndarray
    label: str = field(default="")

    def __post_init__(self) -> None:
        arr = np.asarray(self.images, dtype=np.int64)
        if arr.ndim != 1:
            raise ValueError("images must be one-dimensional")
        check = np.zeros(len(arr), dtype=bool)
        if len(arr) and (arr.min() < 0 or arr.max() >= len(arr)):
            raise ValueError("image out of range")
        check[arr] = True
        if not check.all():
            raise ValueError("images do not form a bijection")
        arr.setflags(write=False)
        object.__setattr__(self, "images", arr)

    @classmethod
    def identity(cls, degree: int, label: str = "id") -> "Perm":
        return cls(np.arange(degree), label)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return int(self.images[x])

    def __mul__(self, other: "Perm") -> "Perm":
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        label = f"{self.label}*{other.label}" if self.label and other.label else ""
        return Perm(self.images[other.images], label)

    def __pow__(self, k: int) -> "Perm":
        result = Perm.identity(self.degree)
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            result = base * result
        return Perm(result.images, f"{self.label}^{k}" if self.label else "")

    def inverse(self) -> "Perm":
        inv = np.empty_like(self.images)
        inv[self.images] = np.arange(self.degree)
        return Perm(inv, f"{self.label}^-1" if self.label else "")

    def is_identity(self) -> bool:
        return bool((self.images == np.arange(self.degree)).all())

    def key(self) -> bytes:
        return self.images.tobytes()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Perm):
            return NotImplemented
        return self.degree == other.degree and bool((self.images == other.images).all())

    def __hash__(self) -> int:
        return hash(self.key())

    def to_json(self) -> str:
        return json.dumps({"label": self.label, "images": self.images.tolist()})

    @classmethod
    def from_json(cls, data: str | bytes) -> "Perm":
        doc = json.loads(data)
        return cls(np.asarray(doc["images"]), doc.get("label", ""))
