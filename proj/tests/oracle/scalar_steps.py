#!/usr/bin/env python3
"""Scalar reference trajectories for the optimizer step rules.

Evaluates each update rule with plain Python floats (IEEE-754 double, same
arithmetic as the C++ build, which compiles with -ffp-contract=off) and
prints the resulting values to 17 significant digits. The numbers frozen
into tests/acceptance.cpp and tests/test_optimizers.cpp come from running
this script; it deliberately shares no code with the library.

Usage: python3 scalar_steps.py
"""


def fmt(x: float) -> str:
    return f"{x:.17g}"


def sgdm_steps(theta, grads, lr, u, tau, lam):
    v = 0.0
    out = []
    for g in grads:
        if lam != 0.0:
            g = g + lam * theta
        v = u * v + (1.0 - tau) * g
        theta = theta - lr * v
        out.append((v, theta))
    return out


def rmsprop_step(theta, g, lr, alpha, eps, lam):
    if lam != 0.0:
        g = g + lam * theta
    v = (1.0 - alpha) * (g * g)
    theta = theta - lr * (g / (v**0.5 + eps))
    return v, theta


def adam_like_step(theta, g, lr, b1, b2, eps, mode):
    # mode: "adam", "adamw" (lam in closure below), "adabelief", "adam3"
    m = (1.0 - b1) * g
    if mode == "adabelief":
        v = (1.0 - b2) * ((g - m) * (g - m)) + eps
    elif mode == "adam3":
        v = (1.0 - b2) * (m * m) + eps
    else:
        v = (1.0 - b2) * (g * g)
    mhat = m / (1.0 - b1)
    vhat = v / (1.0 - b2)
    if mode == "adam3":
        d = mhat / vhat**0.5
    else:
        d = mhat / (vhat**0.5 + eps)
    return m, v, d, theta - lr * d


def main():
    print("== sgdm: theta0=1, g=0.5 twice, lr=0.1, u=0.9, tau=0, lam=0")
    for i, (v, th) in enumerate(sgdm_steps(1.0, [0.5, 0.5], 0.1, 0.9, 0.0, 0.0), 1):
        print(f"  step {i}: v={fmt(v)} theta={fmt(th)}")

    print("== rmsprop: theta0=1, g=1, lr=1e-3, alpha=0.99, eps=1e-8, lam=0")
    v, th = rmsprop_step(1.0, 1.0, 1e-3, 0.99, 1e-8, 0.0)
    print(f"  v={fmt(v)} theta={fmt(th)}")

    for mode in ("adam", "adabelief", "adam3"):
        m, v, d, th = adam_like_step(1.0, 1.0, 1e-3, 0.9, 0.999, 1e-8, mode)
        print(f"== {mode}: theta0=1, g=1, lr=1e-3, betas=(0.9,0.999), eps=1e-8")
        print(f"  m={fmt(m)} v={fmt(v)} dir={fmt(d)} theta={fmt(th)}")

    # adamw applies decoupled decay on top of the adam direction
    lr, lam = 1e-3, 5e-4
    m, v, d, _ = adam_like_step(1.0, 1.0, lr, 0.9, 0.999, 1e-8, "adam")
    th = (1.0 - lr * lam) * 1.0 - lr * d
    print(f"== adamw: theta0=1, g=1, lr=1e-3, lam=5e-4, betas=(0.9,0.999), eps=1e-8")
    print(f"  m={fmt(m)} v={fmt(v)} dir={fmt(d)} theta={fmt(th)}")

    # prediction from the post-step adam state: theta_hat = theta - lr*s*dir
    m, v, d, th = adam_like_step(1.0, 1.0, 1e-3, 0.9, 0.999, 1e-8, "adam")
    th_hat = th - 1e-3 * 2.0 * d
    print(f"== adam predict s=2 from the one-step state: theta_hat={fmt(th_hat)}")

    # two lookahead iterations of sgd (u=0) on f(t)=t^2/2 with lr=0.1, s=1
    theta, v = 1.0, 0.0
    lr = 0.1
    for it in (1, 2):
        th_hat = theta - lr * 1.0 * v  # v is the cached direction
        g = th_hat  # grad of t^2/2
        v = g
        theta = theta - lr * v
        print(f"== lookahead sgd quadratic iter {it}: theta_hat={fmt(th_hat)} theta={fmt(theta)}")


if __name__ == "__main__":
    main()
