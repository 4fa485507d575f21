#!/usr/bin/env python3
"""Independent transcription of the key-generation recurrences.

Prints the frozen values used by tests/test_chaos_keys.cpp and the
acceptance suite. Rerun after any intentional change to key generation.
"""
import math

DEJONG = dict(alpha=1.4, beta=1.56, gamma=1.4, delta=-6.56,
              epsilon=-1.6, zeta=-0.2, eta=2.0, lam=1.0, x0=0.0, y0=0.0)


def dejong(count, p=DEJONG):
    xs, ys = [p["x0"]], [p["y0"]]
    for _ in range(1, count):
        xp, yp = xs[-1], ys[-1]
        xs.append(p["alpha"] * math.sin(yp * p["beta"]) - p["gamma"] * math.cos(xp * p["delta"]))
        ys.append(p["epsilon"] * math.sin(xp * p["zeta"]) - p["eta"] * math.cos(yp * p["lam"]))
    return xs, ys


def to_bytes(series):
    lo, hi = min(series), max(series)
    return [int(math.floor((v - lo) / (hi - lo) * 255.0 + 0.5)) for v in series]


def vdp(h, mu, x0, v0, steps):
    xs, vs = [x0], [v0]
    for _ in range(steps):
        x, v = xs[-1], vs[-1]
        xs.append(x + h * v)
        vs.append(v + h * (mu * (1.0 - x * x) * v - x))
    return xs, vs


def k3(xs):
    lo, hi = min(xs), max(xs)
    norm = [(x - lo) / (hi - lo) for x in xs]
    # MATLAB round: half away from zero; values are non-negative here
    indices = [int(math.floor(v * 64 + 0.5)) + 1 for v in norm]
    numbers = list(range(65))
    for i in range(1, len(indices) + 1):
        idx = (i + indices[i - 1] - 1) % 65 + 1
        if i <= 65 and idx <= 65:
            numbers[i - 1], numbers[idx - 1] = numbers[idx - 1], numbers[i - 1]
    return numbers


def fnv1a(data):
    h = 0xcbf29ce484222325
    for b in data:
        h ^= b
        h = (h * 0x100000001b3) & 0xFFFFFFFFFFFFFFFF
    return h


def main():
    xs, ys = dejong(65536)
    for i in (1, 2, 10, 100, 1000, 10000, 65535):
        print(f"dejong[{i}] = {xs[i]!r}, {ys[i]!r}")
    m = to_bytes(xs)
    k1 = [v % 3 for v in m]
    k2 = sum(m) % 256
    print("byte[0..8] =", m[:8])
    print("trit counts =", [k1.count(t) for t in range(3)])
    print("byte residue counts =", [sum(1 for v in m if v % 3 == t) for t in range(3)])
    print("k2 =", k2)
    vx, vv = vdp(0.3, 0.05, 0.1, 0.0, 10000)
    for i in (1, 2, 100, 5000, 10000):
        print(f"vdp[{i}] = {vx[i]!r}, {vv[i]!r}")
    key = k3(vx)
    print("k3 =", key)
    blob = bytearray()
    blob += (256).to_bytes(4, "little") + (256).to_bytes(4, "little")
    blob += bytes(k1) + bytes([k2]) + bytes(key)
    print(f"fingerprint = 0x{fnv1a(blob):016x}")


if __name__ == "__main__":
    main()
