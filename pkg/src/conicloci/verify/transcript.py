"""Published chart ideals, transcribed as printed (ASCII spelling).

Keys are ``(variety, lambda column, F pivot key, plane type)``.  Each entry
maps ideal names (``ty``, ``sy``, ``tg``) to generator strings and carries a
``source`` tag saying where the display sits in the worked examples.  An
entry of ``["1"]`` records a chart the published argument declares empty.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..loci import PlaneType

S22, S31 = PlaneType.SIGMA22, PlaneType.SIGMA31


@dataclass(frozen=True)
class TranscriptEntry:
    source: str
    ideals: dict = field(default_factory=dict)


TRANSCRIPT: dict[tuple, TranscriptEntry] = {
    ("Y5", 2, "01,02,12", S22): TranscriptEntry(
        "Y5 sigma22, first F chart: declared empty",
        {"ty": ["1"]}),
    ("Y5", 2, "01,03,13", S22): TranscriptEntry(
        "Y5 sigma22, second F chart",
        {"ty": ["g", "i", "k", "f+j", "e-m", "h", "l", "d", "-fc+e+a"],
         "sy": ["-a-e+cf", "-h+ci", "-k+cl+d"],
         "tg": ["g", "i", "k", "f+j", "e-m", "h-l"]}),
    ("Y5", 2, "02,03,23", S22): TranscriptEntry(
        "Y5 sigma22, third F chart",
        {"ty": ["g", "i", "k", "f-j", "e-m", "h", "l", "d", "fc-1-ea"],
         "sy": ["-ae+cf+dg-1", "-ah+ci+dj", "-ak+dl+dm"],
         "tg": ["g", "i", "k", "f-j", "e-m", "h+l"]}),
    ("Y5", 2, "12,13,23", S22): TranscriptEntry(
        "Y5 sigma22, fourth F chart",
        {"ty": ["g", "i", "k", "f-j", "e+m", "h", "l", "d", "c-f-ae"],
         "sy": ["-ae+c-f", "-ah+d-i", "-ak-l"],
         "tg": ["g", "i", "k", "f-j", "e+m", "h-l"]}),
    ("Y5", 2, "01,12,13", S31): TranscriptEntry(
        "Y5 sigma31, vertex type (c,1,-a,s)",
        {"ty": ["f+j", "e-m", "e+a", "h-l", "c-h", "g", "i", "k", "d"],
         "sy": ["-a-e", "c-h", "d-k"],
         "tg": ["f+j", "e-m", "h-l", "g", "i", "k"]}),
    ("Y5", 2, "03,13,23", S31): TranscriptEntry(
        "Y5 sigma31, vertex type (sc,s,-sa,1)",
        {"ty": ["f-j", "h-l", "e+m", "g", "i", "k", "f+ea", "l-cm", "d"],
         "sy": ["-ae-f+eg", "-ah-i+cj+d", "-ak-l+cm"],
         "tg": ["f-j", "h-l", "e+m", "g", "i", "k"]}),
    ("Y4", 2, "03,13,23", S31): TranscriptEntry(
        "Y4 sigma31, first Lambda chart",
        {"ty": ["a", "b", "d", "g", "i", "k", "f", "j", "e+m", "h-l", "h-c^2", "e+c"],
         "sy": ["-ae-f+cg", "-ah-i+cj+d", "-ak-l+cm", "-a+g", "j-b", "m-c"],
         "tg": ["f-j", "e+m", "h-l", "g", "i", "k"]}),
    ("Y4", 3, "01,02,03", S31): TranscriptEntry(
        "Y4 sigma31, second Lambda chart",
        {"ty": ["a", "b", "d", "g", "i", "k", "e", "m", "h-l", "f-j", "h-c", "f-c^2"],
         "sy": ["-b+e", "-c+h", "-d+k", "-a+ce+df-g", "ch+di-j", "ck+dl-m"],
         "tg": ["g", "i", "k", "f-j", "h-l", "e+m"]}),
    ("Y4", 2, "01,02,12", S22): TranscriptEntry(
        "Y4 sigma22, first F chart: declared empty",
        {"ty": ["1"]}),
    ("Y4", 2, "12,13,23", S22): TranscriptEntry(
        "Y4 sigma22, fourth F chart: declared empty",
        {"ty": ["1"]}),
    ("Y4", 2, "01,03,13", S22): TranscriptEntry(
        "Y4 sigma22, second F chart: declared empty",
        {"ty": ["1"]}),
}


def lookup(variety: str, lcol: int, fkey: str, ptype: PlaneType) -> TranscriptEntry | None:
    return TRANSCRIPT.get((variety, lcol, fkey, PlaneType(ptype)))
