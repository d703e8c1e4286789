"""Text and JSON formats: `@offset:digits` configuration lines, tuple
files with `#` comments, and JSON word files for instruction sequences."""

from __future__ import annotations

import json
import re

from .core import ZERO, Config, DomainError, TupleK, validate_tuple
from .generators import (HeadLocal, HeadShift, Particle, Perm4, SafeRewrite,
                         SymbolPerm, TransportWord)
from .permbuild import WordPerm
from .safety import (SIGMA3_PI_WORDS, SIGMA3_TAU_WORDS, ExplicitWords,
                     ExplicitWordMap, NonzeroWords, RuleWordMap,
                     SafeRewriteSpec, strict_params)


class ParseError(DomainError):
    pass


_CONFIG_RE = re.compile(r"@(-?\d+):([0-3]+)$")


def emit_config(x: Config) -> str:
    if x.is_zero():
        return "ZERO"
    offset, digits = x.word()
    return f"@{offset}:{digits}"


def parse_config(text: str) -> Config:
    text = text.strip()
    if text == "ZERO":
        return ZERO
    m = _CONFIG_RE.match(text)
    if m is None:
        raise ParseError(f"not a configuration: {text!r}")
    return Config.from_word(int(m.group(1)), m.group(2))


def emit_tuple(t: TupleK) -> str:
    return "".join(emit_config(c) + "\n" for c in t)


def parse_tuple(text: str) -> TupleK:
    configs = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            configs.append(parse_config(line))
    if not configs:
        raise ParseError("no configurations in tuple file")
    return validate_tuple(tuple(configs))


# -- word files ------------------------------------------------------------


def _emit_word_set(ws) -> object:
    if ws == SIGMA3_PI_WORDS:
        return "SIGMA3_PI"
    if ws == SIGMA3_TAU_WORDS:
        return "SIGMA3_TAU"
    if isinstance(ws, NonzeroWords):
        return "NONZERO_N"
    if isinstance(ws, ExplicitWords):
        return sorted(ws.words)
    raise ParseError(f"unserializable word set {ws!r}")


def _parse_word_set(obj, length: int):
    if obj == "SIGMA3_PI":
        return SIGMA3_PI_WORDS
    if obj == "SIGMA3_TAU":
        return SIGMA3_TAU_WORDS
    if obj == "NONZERO_N":
        return NonzeroWords(length)
    if isinstance(obj, list):
        return ExplicitWords.of(obj)
    raise ParseError(f"bad word set entry {obj!r}")


def _instruction_to_obj(ins) -> dict:
    if isinstance(ins, Particle):
        return {"op": "P", "e": ins.e}
    if isinstance(ins, SymbolPerm):
        return {"op": "SYM", "img": list(ins.perm.img)}
    if isinstance(ins, HeadLocal):
        return {"op": "HL", "r": ins.r,
                "map": [list(p) for p in sorted(ins.wp.moved)]}
    if isinstance(ins, HeadShift):
        return {"op": "HS", "e": ins.e}
    if isinstance(ins, SafeRewrite):
        spec = ins.spec
        strict = strict_params(spec.k, spec.h)
        pi = spec.pi
        return {
            "op": "SR", "k": spec.k, "h": spec.h,
            "U": _emit_word_set(spec.U), "V": _emit_word_set(spec.V),
            "map": (pi.tag if isinstance(pi, RuleWordMap)
                    else [list(p) for p in sorted(pi.pairs)]),
            "ell": "strict" if spec.ell == strict.ell else spec.ell,
            "mrad": "strict" if spec.m_rad == strict.m_rad else spec.m_rad,
            "mode": "relaxed" if spec.relaxed else "strict",
        }
    raise ParseError(f"unserializable instruction {ins!r}")


def _instruction_from_obj(obj) -> object:
    try:
        op = obj["op"]
        if op == "P":
            return Particle(int(obj["e"]))
        if op == "SYM":
            return SymbolPerm(Perm4(tuple(int(v) for v in obj["img"])))
        if op == "HL":
            moved = tuple(sorted((s, d) for s, d in obj["map"]))
            return HeadLocal(int(obj["r"]), WordPerm(2 * int(obj["r"]), moved))
        if op == "HS":
            return HeadShift(int(obj["e"]))
        if op == "SR":
            k, h = int(obj["k"]), int(obj["h"])
            strict = strict_params(k, h)
            pi_obj = obj["map"]
            if isinstance(pi_obj, str):
                pi = RuleWordMap(pi_obj)
            else:
                pi = ExplicitWordMap(tuple(sorted((s, d) for s, d in pi_obj)))
            ell = strict.ell if obj["ell"] == "strict" else int(obj["ell"])
            mrad = strict.m_rad if obj["mrad"] == "strict" else int(obj["mrad"])
            spec = SafeRewriteSpec(
                k, h, _parse_word_set(obj["U"], k), _parse_word_set(obj["V"], h),
                pi, ell, mrad, obj.get("mode", "strict") == "relaxed")
            return SafeRewrite(spec)
    except ParseError:
        raise
    except (KeyError, TypeError, ValueError, DomainError) as exc:
        raise ParseError(f"bad instruction object: {exc}") from exc
    raise ParseError(f"unknown op {obj!r}")


def emit_word(word: TransportWord) -> str:
    return json.dumps([_instruction_to_obj(i) for i in word.steps], indent=1)


def parse_word(text: str) -> TransportWord:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON: {exc}") from exc
    if not isinstance(data, list):
        raise ParseError("word file must be a JSON array")
    return TransportWord(tuple(_instruction_from_obj(o) for o in data))
