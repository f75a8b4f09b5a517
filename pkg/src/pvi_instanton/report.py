"""Verification reports shared by the checkers and the command line."""

from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field

PASS, FAIL, ERROR = "pass", "fail", "error"


@dataclass
class Case:
    name: str
    status: str
    detail: str = ""
    elapsed_ms: int = 0

    @property
    def passed(self) -> bool:
        return self.status == PASS


@dataclass
class VerificationReport:
    """A named list of checked cases; ``overall`` is pass iff every case passes."""

    command: str
    cases: list[Case] = field(default_factory=list)

    @property
    def overall(self) -> str:
        return PASS if all(c.passed for c in self.cases) else FAIL

    @property
    def passed(self) -> bool:
        return self.overall == PASS

    def add(self, name: str, ok: bool, detail: str = "", elapsed_ms: int = 0) -> Case:
        case = Case(name, PASS if ok else FAIL, detail, elapsed_ms)
        self.cases.append(case)
        return case

    @contextmanager
    def case(self, name: str):
        """Time a block; the block sets ``.status``/``.detail`` on the yielded case.

        An exception inside the block is recorded as an ``error`` case.
        """
        c = Case(name, FAIL)
        start = time.perf_counter()
        try:
            yield c
        except (ArithmeticError, ValueError) as exc:
            c.status, c.detail = ERROR, f"{type(exc).__name__}: {exc}"
        finally:
            c.elapsed_ms = int(round(1000 * (time.perf_counter() - start)))
            self.cases.append(c)

    def failed(self) -> list[Case]:
        return [c for c in self.cases if not c.passed]

    def extend(self, other: "VerificationReport", prefix: str = "") -> None:
        for c in other.cases:
            self.cases.append(Case(prefix + c.name, c.status, c.detail, c.elapsed_ms))

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "cases": [asdict(c) for c in self.cases],
            "overall": self.overall,
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_dict(cls, data: dict) -> "VerificationReport":
        rep = cls(data["command"], [Case(**c) for c in data["cases"]])
        if data.get("overall", rep.overall) != rep.overall:
            raise ValueError("report 'overall' field disagrees with its cases")
        return rep

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        return cls.from_dict(json.loads(text))

    def summary_lines(self) -> list[str]:
        return [f"[{c.status.upper():5}] {c.name}  {c.detail}".rstrip() for c in self.cases]
