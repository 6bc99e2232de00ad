"""Writing states by hand, saving them, and driving the command line.

The same steps work from a shell, e.g.

    multisep parse --dims 2,2 --expr "|00> + |11>" --normalize --out bell.json
    multisep separable --in bell.json
"""
import os
import tempfile

from multisep import format_ket, parse_ket, read_state, write_state
from multisep.cli import main

state = parse_ket("0.6|0,1> - 0.8i|1,0>", [2, 2])
print("parsed:", format_ket(state))

with tempfile.TemporaryDirectory() as tmp:
    path = os.path.join(tmp, "state.json")
    write_state(state, path)
    assert (read_state(path).amplitudes == state.amplitudes).all()

    for argv in (["separable", "--in", path], ["concurrence", "--in", path, "--oracle"], ["--json", "schmidt", "--in", path, "--cut", "1"]):
        print("$ multisep", " ".join(a if a != path else "state.json" for a in argv))
        print("exit", main(argv))
