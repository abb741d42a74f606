"""Reduced words over the free product of two finite groups.

A word is a sequence of letters, each a nontrivial element of one factor;
reduced means adjacent letters come from different factors.  Reduction
merges adjacent same-factor letters and drops identities until stable; the
result is the unique normal form, so equality of words is tuple equality.
"""

from __future__ import annotations

from dataclasses import dataclass

from .groups import Perm, PermGroup


@dataclass(frozen=True)
class Letter:
    factor: int
    elem: Perm


@dataclass(frozen=True)
class FPWord:
    letters: tuple[Letter, ...]

    def __len__(self) -> int:
        return len(self.letters)

    def is_identity(self) -> bool:
        return not self.letters


class FreeProduct:
    """The free product of two enumerable permutation groups."""

    def __init__(self, g0: PermGroup, g1: PermGroup):
        self.factors = (g0, g1)
        self._sets = (g0.element_set(), g1.element_set())

    def identity(self) -> FPWord:
        return FPWord(())

    def _check_letter(self, letter) -> Letter:
        if isinstance(letter, tuple):
            letter = Letter(letter[0], letter[1])
        if letter.factor not in (0, 1):
            raise ValueError(f"factor index must be 0 or 1, got {letter.factor}")
        if letter.elem not in self._sets[letter.factor]:
            raise ValueError(
                f"letter element {letter.elem!r} is not in factor {letter.factor}"
            )
        return letter

    def reduce(self, raw) -> FPWord:
        """Left-to-right stack reduction of an arbitrary letter sequence."""
        out: list[Letter] = []
        for item in raw:
            cur = self._check_letter(item)
            if cur.elem.is_identity():
                continue
            while out and out[-1].factor == cur.factor:
                merged = out.pop().elem * cur.elem
                if merged.is_identity():
                    cur = None
                    break
                cur = Letter(cur.factor, merged)
            if cur is not None:
                out.append(cur)
        return FPWord(tuple(out))

    def multiply(self, w1: FPWord, w2: FPWord) -> FPWord:
        return self.reduce(w1.letters + w2.letters)

    def inverse(self, w: FPWord) -> FPWord:
        return self.reduce(
            Letter(l.factor, ~l.elem) for l in reversed(w.letters)
        )

    def word(self, *items) -> FPWord:
        """Convenience constructor from (factor, elem) pairs; reduces."""
        return self.reduce(items)

    def is_reduced(self, letters) -> bool:
        if isinstance(letters, FPWord):
            letters = letters.letters
        letters = [self._check_letter(l) for l in letters]
        if any(l.elem.is_identity() for l in letters):
            return False
        return all(
            letters[i].factor != letters[i + 1].factor
            for i in range(len(letters) - 1)
        )
