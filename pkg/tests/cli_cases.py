"""Golden end-to-end cases for the command-line interface.

Each case is (argv, expected exit code, expected stdout). Witness files named
in argv are created from FILES in the working directory first.
"""

FILES = {
    "figure1.txt": "2 2 13\n3 2\n-2 3\n",
    "tampered.txt": "2 2 13\n3 2\n-2 4\n",
    "truncated.txt": "2 2 13\n3 2\n",
    "partial.txt": "2 3 9\n1 2 2\n2 1 -2\n",
    "skew.txt": "2 3 2\n1 1 0\n1 0 0\n",
}

CASES = [
    # classify
    ("classify 3 3", 0, '{"command":"classify","inputs":{"d":"3","n":"3"},"descriptor":"I1","d_mod_4":"3","n_minus_d":"0"}\n'),
    ("classify 2 5", 0, '{"command":"classify","inputs":{"d":"2","n":"5"},"descriptor":"N0","d_mod_4":"2","n_minus_d":"3"}\n'),
    ("classify 5 4", 2, ""),
    # member
    ("member 3 2 3", 1, '{"command":"member","inputs":{"m":"3","d":"2","n":"3"},"member":false,"descriptor":"I2","criterion":"fermat","reason":"I2 violation: prime 3 odd exponent"}\n'),
    ("member 13 2 2", 0, '{"command":"member","inputs":{"m":"13","d":"2","n":"2"},"member":true,"descriptor":"I2","criterion":null,"reason":null}\n'),
    ("member 7 1 3", 1, '{"command":"member","inputs":{"m":"7","d":"1","n":"3"},"member":false,"descriptor":"I3","criterion":"legendre","reason":"I3 violation: 7 = 4^0*7 with 7 = 7 mod 8"}\n'),
    # construct
    ("construct 13 2 2", 0, '{"command":"construct","inputs":{"m":"13","d":"2","n":"2"},"member":true,"descriptor":"I2","criterion":null,"reason":null,"valid":true,"rows":[["3","2"],["-2","3"]],"witness":"2 2 13\\n3 2\\n-2 3\\n"}\n'),
    ("construct 0 3 5", 0, '{"command":"construct","inputs":{"m":"0","d":"3","n":"5"},"member":true,"descriptor":"N0","criterion":null,"reason":null,"valid":true,"rows":[["0","0","0","0","0"],["0","0","0","0","0"],["0","0","0","0","0"]],"witness":"3 5 0\\n0 0 0 0 0\\n0 0 0 0 0\\n0 0 0 0 0\\n"}\n'),
    ("construct 7 3 3", 1, '{"command":"construct","inputs":{"m":"7","d":"3","n":"3"},"member":false,"descriptor":"I1","criterion":"non-square","reason":"I1 violation: 7 is not a perfect square"}\n'),
    # verify
    ("verify figure1.txt", 0, '{"command":"verify","inputs":{"file":"figure1.txt"},"valid":true,"d":"2","n":"2","m":"13","dots":[{"i":"0","j":"1","dot":"0"}],"norm_defects":["0","0"],"problems":[]}\n'),
    ("verify tampered.txt", 1, '{"command":"verify","inputs":{"file":"tampered.txt"},"valid":false,"d":"2","n":"2","m":"13","dots":[{"i":"0","j":"1","dot":"2"}],"norm_defects":["0","7"],"problems":["row 1: norm 20 != 13","rows 0,1: dot product 2"]}\n'),
    ("verify truncated.txt", 2, ""),
    # decompose
    ("decompose 7 4", 0, '{"command":"decompose","inputs":{"m":"7","k":"4"},"representable":true,"terms":["1","1","1","2"],"reason":null}\n'),
    ("decompose 21 2", 1, '{"command":"decompose","inputs":{"m":"21","k":"2"},"representable":false,"terms":null,"reason":"21 is not a sum of 2 squares (prime 3 odd exponent)"}\n'),
    ("decompose 7 x", 2, ""),
    # oracle
    ("oracle 3 2 3", 1, '{"command":"oracle","inputs":{"m":"3","d":"2","n":"3"},"member":false,"rows":null,"witness":null}\n'),
    ("oracle 13 2 2", 0, '{"command":"oracle","inputs":{"m":"13","d":"2","n":"2"},"member":true,"rows":[["-3","-2"],["-2","3"]],"witness":"2 2 13\\n-3 -2\\n-2 3\\n"}\n'),
    ("oracle 61 1 1", 2, ""),
    # census
    ("census 2 3 4", 0, "".join(
        '{"command":"census","inputs":{"d":"2","n":"3","m_max":"4"},"m":"%d","member":%s,"frames":"%d","capped":false}\n' % row
        for row in [(0, "true", 1), (1, "true", 12), (2, "true", 12), (3, "false", 0), (4, "true", 12)]
    )),
    ("census 1 1 3", 0, "".join(
        '{"command":"census","inputs":{"d":"1","n":"1","m_max":"3"},"m":"%d","member":%s,"frames":"%d","capped":false}\n' % row
        for row in [(0, "true", 1), (1, "true", 2), (2, "false", 0), (3, "false", 0)]
    )),
    ("census 3 2 4", 2, ""),
    # witt
    ("witt 1 2 2 2 1 -2", 0, '{"command":"witt","inputs":{"v":["1","2","2"],"w":["2","1","-2"]},"m":"9","x":"0","y":"-3","sign_flipped":false,"check":"0^2+(-3)^2=9"}\n'),
    ("witt 1 1 0 1 -1 0", 0, '{"command":"witt","inputs":{"v":["1","1","0"],"w":["1","-1","0"]},"m":"2","x":"1","y":"-1","sign_flipped":true,"check":"1^2+(-1)^2=2"}\n'),
    ("witt 1 1 1 1 -1 0", 2, ""),
    # extend
    ("extend partial.txt", 0, '{"command":"extend","inputs":{"file":"partial.txt"},"basis":[["1","2","2"],["2","1","-2"],["-2","2","-1"]],"residual_norms":["9"]}\n'),
    ("extend figure1.txt", 0, '{"command":"extend","inputs":{"file":"figure1.txt"},"basis":[["3","2"],["-2","3"]],"residual_norms":[]}\n'),
    ("extend skew.txt", 2, ""),
]


def run_case(argv, cwd):
    import subprocess
    import sys

    for name, text in FILES.items():
        (cwd / name).write_text(text)
    proc = subprocess.run(
        [sys.executable, "-m", "latcube", *argv.split()],
        cwd=cwd,
        capture_output=True,
        text=True,
    )
    return proc.returncode, proc.stdout, proc.stderr
