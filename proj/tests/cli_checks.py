"""Exit codes and reproducibility of the command line tool."""
import subprocess
import sys

cli = sys.argv[1]
POINTS = "0,0,1;1,0,1;0,1,1;1,1,1;2,3,1;3,-1,1"
COLLINEAR = "0,0,1;1,0,1;2,0,1;1,1,1;2,3,1;3,-1,1"
CUBIC = "15,152,-1,-10,57,-50,0,2,-10,15,0,-9,0,2,5,0,0,0,0,0"

cases = [
    (0, ["classify", "--f5", "1,0,0,0,0,-1", "--f2", "1,0,-1", "--json"]),
    (0, ["classify", "--roots5", "1:0;0:1;1:1;1:-1;1:2", "--roots2", "2:3;3:-1"]),
    (0, ["classify", "--case", "17"]),
    (0, ["classify", "--case", "cusp", "--json"]),
    (1, ["classify", "--f5", "0,0,0,0,0,1", "--f2", "1,0,0"]),
    (1, ["classify", "--f5", "0,0,0,0,0,0", "--f2", "1,0,0"]),
    (64, ["classify", "--f5", "1,2,x", "--f2", "1,0,0"]),
    (64, ["classify", "--f5", "1,2", "--f2", "1,0,0"]),
    (64, ["classify"]),
    (64, ["no-such-command"]),
    (64, []),
    (0, ["analyze", "--cubic", CUBIC, "--l", "1,0,19/3,8/3;0,1,0,0", "--m", "0,0,1,0;0,0,0,1", "--json"]),
    (1, ["analyze", "--cubic", CUBIC, "--l", "1,0,0,0;0,1,0,0", "--m", "0,0,1,0;0,0,0,1"]),
    (64, ["analyze", "--cubic", "1,2,3", "--l", "1,0,0,0;0,1,0,0", "--m", "0,0,1,0;0,0,0,1"]),
    (0, ["from-points", "--points", POINTS, "--json"]),
    (1, ["from-points", "--points", COLLINEAR]),
    (64, ["from-points", "--points", "0,0,1;1,0,1"]),
    (0, ["orbits", "--k", "2", "--json"]),
    (64, ["orbits", "--k", "7"]),
    (0, ["lines", "--nodes", "4"]),
    (0, ["lattice", "U+E6+A2^3", "--json"]),
    (0, ["lattice", "E6", "--iso", "A2", "--negate"]),
    (1, ["lattice", "Z9"]),
    (64, ["lattice", "A2("]),
    (0, ["tables", "--table", "2", "--check"]),
    (0, ["verify", "--group", "census"]),
    (1, ["verify", "--group", "nothing"]),
]

failed = 0
for code, args in cases:
    run = subprocess.run([cli] + args, capture_output=True, text=True)
    if run.returncode != code:
        failed += 1
        print(f"FAIL k3cubic {' '.join(args)}: exit {run.returncode}, expected {code}\n{run.stdout}{run.stderr}")

for args in (["orbits", "--json"], ["from-points", "--points", POINTS, "--json"], ["tables", "--json"]):
    a = subprocess.run([cli] + args, capture_output=True).stdout
    b = subprocess.run([cli] + args, capture_output=True).stdout
    if a != b:
        failed += 1
        print(f"FAIL k3cubic {' '.join(args)}: output differs between runs")

orbits = subprocess.run([cli, "orbits", "--k", "2"], capture_output=True, text=True).stdout
if orbits.count("orbit ") != 4 or "index sum 27" not in orbits:
    failed += 1
    print("FAIL orbits --k 2 does not report four orbits with index sum 27")

print(f"{len(cases)} exit-code cases, {failed} failures")
sys.exit(1 if failed else 0)
