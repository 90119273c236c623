"""The tensor substrate: reverse-mode gradients and the AdamW update.

Builds a two-layer network by hand, checks its gradients against central
finite differences, and fits a small regression problem.
"""

import numpy as np

from remap import autodiff as ad
from remap.optim import AdamW

rng = np.random.default_rng(0)

# gradients vs finite differences, float64
w1 = ad.tensor(rng.normal(size=(3, 8)) * 0.5, requires_grad=True, dtype=np.float64)
w2 = ad.tensor(rng.normal(size=(8, 1)) * 0.5, requires_grad=True, dtype=np.float64)
x = ad.tensor(rng.normal(size=(16, 3)), dtype=np.float64)
y = ad.tensor(rng.normal(size=(16, 1)), dtype=np.float64)


def loss_fn(w1_, w2_):
    pred = ad.matmul(ad.gelu(ad.matmul(x, w1_)), w2_)
    d = ad.sub(pred, y)
    return ad.mean(ad.mul(d, d))


err = ad.grad_check(loss_fn, [w1, w2], h=1e-5)
print(f"finite-difference check over {w1.data.size + w2.data.size} parameters: "
      f"max rel-err {err:.2e}")

# fit the same problem in float32 with AdamW
w1 = ad.tensor(rng.normal(size=(3, 8)) * 0.5, requires_grad=True)
w2 = ad.tensor(rng.normal(size=(8, 1)) * 0.5, requires_grad=True)
x32 = ad.tensor(x.data, dtype=np.float32)
target = ad.tensor(np.sin(x.data.sum(axis=1, keepdims=True)), dtype=np.float32)
opt = AdamW([w1, w2], lr=1e-2, weight_decay=1e-6)

for step in range(1, 401):
    opt.zero_grad()
    pred = ad.matmul(ad.gelu(ad.matmul(x32, w1)), w2)
    d = ad.sub(pred, target)
    loss = ad.mean(ad.mul(d, d))
    ad.backward(loss, leaves=opt.params)
    opt.step()
    if step % 100 == 0:
        print(f"step {step}: loss {float(loss.data):.5f}")

print("a tiny GeLU network fits a smooth target with the same machinery the "
      "policy trains on")
