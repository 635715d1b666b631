# Copyright 2026 The comqel Authors

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

#     http://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent reference values frozen into the C++ unit tests.

Run with `python3 tests/oracles/derive_values.py`. Uses only mpmath / math,
no code from the library.
"""
import math

import mpmath as mp


def negated_ackley(xs):
    d = len(xs)
    sq = sum(x * x for x in xs) / d
    cs = sum(mp.cos(2 * mp.pi * x) for x in xs) / d
    return -(-20 * mp.e ** (-0.2 * mp.sqrt(sq)) - mp.e ** cs + 20 + mp.e)


def reflect(x, g, mu):
    u = x + mu * g
    if u > 1:
        u = 2 - u
    elif u < -1:
        u = -2 - u
    return min(1.0, max(-1.0, u))


def chebyshev_toy_ascent(x0, mu, steps):
    # f(x) = 2x^2 - 1, f'(x) = 4x, derivative taken at the clamped point
    x = x0
    trace = [x]
    for _ in range(steps):
        xc = x if abs(x) <= 1 - 1e-7 else math.copysign(1 - 1e-7, x)
        x = reflect(x, 4 * xc, mu)
        trace.append(x)
    return trace


def matched_hidden(d_in, budget):
    h = 1
    while d_in * (h + 1) + 2 * (h + 1) + 1 <= budget:
        h += 1
    return h


if __name__ == "__main__":
    mp.mp.dps = 30
    print("negated ackley(0.5) =", negated_ackley([mp.mpf("0.5")]))
    t = chebyshev_toy_ascent(0.3, 0.05, 100)
    print("toy ascent x^100 =", repr(t[-1]))
    print("toy ascent min/max of last 20 =", min(t[-20:]), max(t[-20:]))
    for d, p in [(2, 48), (1, 36), (3, 126)]:
        print(f"matched hidden d={d} budget={p}:", matched_hidden(d, p))
