"""Check results and a deterministic JSON emitter for them."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

PASS, FAIL, MISMATCH = "pass", "fail", "mismatch"


@dataclass
class Check:
    """One verification outcome.

    ``mismatch`` marks a printed reference line that disagrees with the
    generated result; it is reported but does not fail a run.
    """

    name: str
    status: str
    details: dict = field(default_factory=dict)
    children: list["Check"] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    @property
    def ok(self) -> bool:
        return self.status != FAIL and all(c.ok for c in self.children)

    def to_dict(self) -> dict:
        out = {"name": self.name, "status": self.status}
        if self.details:
            out["details"] = self.details
        if self.children:
            out["checks"] = [c.to_dict() for c in self.children]
        return out

    def find(self, name: str) -> "Check":
        for c in self.children:
            if c.name == name:
                return c
        raise KeyError(name)


def check(name: str, ok: bool, **details) -> Check:
    return Check(name, PASS if ok else FAIL, details)


def mismatch(name: str, **details) -> Check:
    return Check(name, MISMATCH, details)


def group(name: str, children: list[Check], **details) -> Check:
    status = PASS
    if any(not c.ok for c in children):
        status = FAIL
    elif any(c.status == MISMATCH or any(g.status == MISMATCH for g in c.children) for c in children):
        status = MISMATCH
    return Check(name, status, details, children)


def fmt_float(x: float) -> str:
    if math.isnan(x) or math.isinf(x):
        return json.dumps(str(x))
    return f"{x:.12e}"


def dumps(obj, indent: int = 2) -> str:
    """JSON with sorted keys and fixed-format floats, byte-stable across runs."""

    def enc(o, level):
        pad = " " * (indent * (level + 1))
        end = " " * (indent * level)
        if isinstance(o, Check):
            o = o.to_dict()
        if isinstance(o, dict):
            if not o:
                return "{}"
            items = [f"{pad}{json.dumps(str(k))}: {enc(o[k], level + 1)}" for k in sorted(o, key=str)]
            return "{\n" + ",\n".join(items) + "\n" + end + "}"
        if isinstance(o, (list, tuple)):
            if not o:
                return "[]"
            if all(isinstance(v, (int, float, str, bool)) or v is None for v in o) and len(o) <= 8:
                return "[" + ", ".join(enc(v, level + 1) for v in o) + "]"
            return "[\n" + ",\n".join(pad + enc(v, level + 1) for v in o) + "\n" + end + "]"
        if isinstance(o, bool) or o is None:
            return json.dumps(o)
        if isinstance(o, int):
            return str(o)
        if isinstance(o, float):
            return fmt_float(o)
        return json.dumps(str(o), ensure_ascii=False)

    return enc(obj, 0) + "\n"
