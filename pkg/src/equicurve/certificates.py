"""Machine-checked certificates: lists of (claim, status, witness) clauses."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Clause:
    claim: str
    ok: bool
    witness: str = ""


@dataclass
class Certificate:
    title: str
    clauses: list[Clause] = field(default_factory=list)

    def check(self, claim: str, ok: bool, witness: str = "") -> bool:
        self.clauses.append(Clause(claim, bool(ok), witness))
        return bool(ok)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.clauses)

    def lines(self) -> list[str]:
        out = [f"certificate: {self.title}"]
        for c in self.clauses:
            status = "PASS" if c.ok else "FAIL"
            tail = f"  [{c.witness}]" if c.witness and not c.ok else ""
            out.append(f"  {status}  {c.claim}{tail}")
        return out

    def __str__(self) -> str:
        return "\n".join(self.lines())

    def to_json(self) -> dict:
        return {
            "title": self.title,
            "ok": self.ok,
            "clauses": [
                {"claim": c.claim, "status": "PASS" if c.ok else "FAIL",
                 "witness": c.witness}
                for c in self.clauses
            ],
        }


def merge(title: str, certs: list[Certificate]) -> Certificate:
    out = Certificate(title)
    for c in certs:
        for cl in c.clauses:
            out.clauses.append(Clause(f"{c.title}: {cl.claim}", cl.ok, cl.witness))
    return out
