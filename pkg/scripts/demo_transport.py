#!/usr/bin/env python3
"""Walk one tuple through the full normalization pipeline, printing the
intermediate vectors after each stage and the final verified transport
word to the canonical tuple."""

import argparse

from fourshift.core import classify, validate_tuple
from fourshift.generators import apply_word
from fourshift.serial import emit_config, parse_config
from fourshift.transporter import (canonical_great, make_canonical, make_good,
                                   make_great, transport, verify)

DEFAULT = ["@0:3", "@-1:201", "@0:22"]


def show(label, t):
    flags = [classify(c) for c in t]
    tags = ["great" if f.great else "good" if f.good else
            "pregood" if f.pregood else "prepregood" if f.prepregood
            else "raw" for f in flags]
    cells = " ".join(emit_config(c) for c in t)
    print(f"{label:12s} {cells}   [{', '.join(tags)}]")


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("component", nargs="*", default=DEFAULT,
                    help="components as @offset:digits (default: demo rows)")
    args = ap.parse_args()

    t = validate_tuple(tuple(parse_config(s) for s in args.component))
    show("start", t)

    w1, good = make_good(t)
    show("good", good)
    w2, great = make_great(good)
    show("great", great)
    w3, canon = make_canonical(great)
    show("canonical", canon)
    print(f"stage word lengths: good={len(w1.steps)} "
          f"great={len(w2.steps)} canonical={len(w3.steps)}")

    target = canonical_great(len(t.components))
    word = transport(t, target)
    assert verify(word, t, target)
    replay = apply_word(t, word)
    show("transported", replay)
    print(f"verified transport word to the canonical tuple: "
          f"{len(word.steps)} instructions")


if __name__ == "__main__":
    main()
