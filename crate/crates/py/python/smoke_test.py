"""Smoke test for the compiled extension.

Build and run:
    maturin develop -m crates/py/Cargo.toml
    python crates/py/python/smoke_test.py
"""

import json

import ydlong


def main():
    for prime in (None, 7):
        text = ydlong.sweedler(prime)
        report = ydlong.check(text)
        assert report.passed, str(report)
        print(repr(report))

    # flip one antipode coefficient: the antipode axioms must fail
    lines = ydlong.sweedler().splitlines()
    i = lines.index("map antipode 4 -> 4") + 1
    lines[i] = lines[i].rsplit(" ", 1)[0] + " 5"
    broken = ydlong.check("\n".join(lines))
    assert not broken.passed
    assert json.loads(broken.to_json())["passed"] is False
    print(repr(broken), broken.failures[:2])

    try:
        ydlong.check("field rational\nbogus")
    except ydlong.ParseError as e:
        print("parse error:", e)
    else:
        raise AssertionError("malformed input accepted")

    print("smoke test: OK")


if __name__ == "__main__":
    main()
