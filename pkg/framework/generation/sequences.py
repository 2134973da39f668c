from collections import Counter
from dataclasses import dataclass, field
from typing import List, Tuple


class EmptyModelError(ValueError):
    pass


class SequenceFileError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class EventSeq:
    events: Tuple[str, ...]
    origin: str = field(default="manual", compare=False)  # por | long | exhaustive | manual

    def __len__(self):
        return len(self.events)

    def __iter__(self):
        return iter(self.events)

    def __str__(self):
        return ";".join(self.events)


@dataclass
class SequenceBatch:
    """Walks in generation order, duplicates included."""
    walks: List[EventSeq] = field(default_factory=list)
    truncated: int = 0
    partial: bool = False

    @property
    def unique(self):
        seen = set()
        result = []
        for walk in self.walks:
            if walk not in seen:
                seen.add(walk)
                result.append(walk)
        return result

    @property
    def multiplicity(self):
        return Counter(walk.events for walk in self.walks)

    @property
    def duplicates(self):
        return len(self.walks) - len(self.unique)


def read_sequences(path, spec=None):
    """One sequence per line, events joined by ';'. '#' starts a comment."""
    sequences = []
    known = set(spec.event_names) if spec is not None else None
    with open(path, "r", encoding="utf-8") as f:
        for number, raw in enumerate(f, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            events = tuple(part.strip() for part in line.split(";"))
            if any(not event for event in events):
                raise SequenceFileError(f"{path}:{number}: empty event name")
            if known is not None:
                unknown = [event for event in events if event not in known]
                if unknown:
                    raise SequenceFileError(f"{path}:{number}: undeclared event {unknown[0]!r}")
            sequences.append(EventSeq(events, origin="manual"))
    return sequences


def write_sequences(path, sequences, header=None):
    with open(path, "w", encoding="utf-8") as f:
        if header:
            f.write(f"# {header}\n")
        for seq in sequences:
            f.write(f"{seq}\n")
