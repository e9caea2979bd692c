"""Shared precision policy for numeric predicates.

Predicates that cannot be decided exactly escalate working precision by
doubling until the cap; what is still ambiguous then is reported as
undecided, never silently classified.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class PrecisionConfig:
    start_bits: int = 256
    cap_bits: int = 4096

    def ladder(self):
        bits = self.start_bits
        while bits <= self.cap_bits:
            yield bits
            bits *= 2


DEFAULT_PRECISION = PrecisionConfig()
