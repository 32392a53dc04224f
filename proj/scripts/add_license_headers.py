#!/usr/bin/env python3
"""Prepend the Apache-2.0 header to project sources. Safe to rerun."""

import pathlib
import sys

NOTICE = """Copyright 2026 The benchagg Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License."""

ROOT = pathlib.Path(__file__).resolve().parent.parent
DIRS = ["include", "src", "tools", "tests", "scripts"]
SLASH = {".cpp", ".hpp", ".h", ".cc"}
HASH = {".cmake", ".py"}


def header(style):
    lines = NOTICE.splitlines()
    if style == "slash":
        return "".join(("// " + l).rstrip() + "\n" for l in lines) + "\n"
    return "".join(("# " + l).rstrip() + "\n" for l in lines) + "\n"


def targets():
    files = [ROOT / "CMakeLists.txt"]
    for d in DIRS:
        files += sorted(p for p in (ROOT / d).rglob("*") if p.is_file())
    for p in files:
        if p.suffix in SLASH:
            yield p, "slash"
        elif p.suffix in HASH or p.name == "CMakeLists.txt":
            yield p, "hash"


def main():
    changed = 0
    for path, style in targets():
        text = path.read_text()
        if "Copyright 2026 The benchagg Authors." in text[:400]:
            continue
        shebang = ""
        if text.startswith("#!"):
            shebang, _, text = text.partition("\n")
            shebang += "\n"
        path.write_text(shebang + header(style) + text)
        changed += 1
    print(f"headers added to {changed} file(s)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
