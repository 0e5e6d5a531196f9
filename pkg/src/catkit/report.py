"""Machine-readable verdicts with counterexample witnesses."""
from dataclasses import dataclass, field


def _plain(value):
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if hasattr(value, "item"):
        return value.item()
    return value


def _order_key(w):
    if isinstance(w, int):
        return (0, w, "")
    return (1, 0, str(w))


@dataclass(frozen=True, order=True)
class Violation:
    name: str
    witness: tuple
    detail: str = ""

    @property
    def family(self):
        return self.name.split(".", 1)[0]

    def to_dict(self):
        return {"name": self.name, "witness": _plain(list(self.witness)), "detail": self.detail}

    def __str__(self):
        w = ",".join(str(v) for v in self.witness)
        text = f"{self.name} violated at ({w})"
        return f"{text}: {self.detail}" if self.detail else text


@dataclass
class StructureReport:
    violations: list = field(default_factory=list)
    stats: dict = field(default_factory=dict)
    info: dict = field(default_factory=dict)

    @property
    def verdict(self):
        return not self.violations

    def __bool__(self):
        return self.verdict

    def add(self, name, witness=(), detail=""):
        self.violations.append(Violation(name, tuple(int(w) if hasattr(w, "item") else w for w in witness), detail))

    def count(self, key, n=1):
        self.stats[key] = self.stats.get(key, 0) + n

    def merge(self, other, prefix=None):
        for v in other.violations:
            name = f"{prefix}.{v.name}" if prefix else v.name
            self.violations.append(Violation(name, v.witness, v.detail))
        for k, v in other.stats.items():
            key = f"{prefix}.{k}" if prefix else k
            if isinstance(v, int) and isinstance(self.stats.get(key), int):
                self.stats[key] += v
            else:
                self.stats[key] = v
        for k, v in other.info.items():
            self.info[f"{prefix}.{k}" if prefix else k] = v
        return self

    def names(self):
        return {v.name for v in self.violations}

    def families(self):
        return {v.family for v in self.violations}

    def first(self, name):
        for v in self.violations:
            if v.name == name:
                return v
        return None

    def finalize(self):
        """Sort violations so that output is reproducible."""
        self.violations.sort(key=lambda v: (v.name, [_order_key(w) for w in v.witness], v.detail))
        return self

    def to_dict(self):
        self.finalize()
        return {
            "verdict": self.verdict,
            "violations": [v.to_dict() for v in self.violations],
            "stats": _plain(dict(sorted(self.stats.items()))),
            "info": _plain(dict(sorted(self.info.items()))),
        }

    def format_text(self, title="report"):
        self.finalize()
        lines = [f"{title}: {'PASS' if self.verdict else 'FAIL'}"]
        lines.extend(f"  {v}" for v in self.violations)
        for k, v in sorted(self.info.items()):
            lines.append(f"  info {k}: {v}")
        return "\n".join(lines) + "\n"
