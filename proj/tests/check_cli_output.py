#  Copyright 2026 The neutro Authors
#
#  Licensed under the Apache License, Version 2.0 (the "License");
#  you may not use this file except in compliance with the License.
#  You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
#  Unless required by applicable law or agreed to in writing, software
#  distributed under the License is distributed on an "AS IS" BASIS,
#  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#  See the License for the specific language governing permissions and
#  limitations under the License.

"""Checks the neutro binary's JSON output against the schema and its
inequality table against the golden file."""

import argparse
import json
import subprocess
import sys

import jsonschema

EVAL_CASES = [
    ["<1,0,0> & <0,0,1>"],
    ["<1,0,0> & <0,0,1>", "--family", "ti", "--tnorm", "luk"],
    ["!<0.2,0.3,0.9> | <0.4,0.4,0.4>", "--family", "plith", "--tnorm", "product"],
    ["<[0.1,0.4],[0.2,0.3],[0.5,0.6]> -> <[0.2,0.3],[0.1,0.5],[0.4,0.7]>"],
    ["<{0.2,0.5},{0.1},{0.3,0.9}> & <{0.4},{0.6,0.7},{0.2}>"],
    ["<R(1),0,0> & <0.5,[L(0),0.2],{L(0),0.3}>"],
    ["p & q", "--bind", "p=<0.8,0.4,0.3>", "--bind", "q=<0.6,0.2,0.5>"],
    ["<80,40,30> | <60,20,50>", "--scale", "percent"],
    ["<1.2,-0.1,0> & <0.5,0.5,0.5>", "--psi", "-0.5", "--omega", "1.5"],
]


def run(binary, args):
    return subprocess.run([binary, *args], capture_output=True, check=False)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("binary")
    parser.add_argument("schema")
    parser.add_argument("golden")
    opts = parser.parse_args()

    with open(opts.schema, encoding="utf-8") as fh:
        schema = json.load(fh)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    failures = 0
    for case in EVAL_CASES:
        proc = run(opts.binary, ["eval", *case, "--json"])
        out = proc.stdout.decode("utf-8")
        if proc.returncode != 0 or not out.endswith("\n") or out.count("\n") != 1:
            print(f"FAIL eval {case}: exit {proc.returncode}, output {out!r}")
            failures += 1
            continue
        errors = list(validator.iter_errors(json.loads(out)))
        for err in errors:
            print(f"FAIL eval {case}: {err.message}")
        failures += bool(errors)

    proc = run(opts.binary, ["eval", "<1.2,0,0> & <0.5,0.5,0.5>", "--psi", "-0.5", "--omega", "1.5", "--json"])
    if json.loads(proc.stdout)["warnings"] == []:
        print("FAIL clamp warning missing from JSON output")
        failures += 1

    with open(opts.golden, "rb") as fh:
        golden = fh.read()
    proc = run(opts.binary, ["table", "inequalities", "--a", "0.7", "--b", "0.2"])
    if proc.returncode != 0 or proc.stdout != golden:
        print("FAIL table inequalities output differs from the golden file")
        failures += 1

    print(f"{len(EVAL_CASES)} JSON results checked, {failures} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
