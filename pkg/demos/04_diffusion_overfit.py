"""The action diffusion head in isolation.

Shows the squared-cosine schedule, the forward noising statistics, and then
overfits the FiLM U-Net to a single fixed trajectory with a fixed condition:
after training, ancestral sampling collapses onto that trajectory.
"""

import numpy as np

from remap import autodiff as ad
from remap.diffusion import UNetConfig, add_noise, init_unet, make_schedule, predict_noise, sample
from remap.layers import Params, trainable
from remap.optim import AdamW

sch = make_schedule(100)
print("squared-cosine schedule, K=100:")
for k in (1, 25, 50, 75, 100):
    print(f"  k={k:3d}  beta={sch.betas[k-1]:.4f}  bar_alpha={sch.alphas_cumprod[k-1]:.5f}")

rng = np.random.default_rng(0)
a0 = np.zeros((1, 16, 2), dtype=np.float32)
eps = rng.standard_normal((50_000, 16, 2)).astype(np.float32)
noisy = add_noise(np.repeat(a0, 50_000, 0), eps, 50, sch)
print(f"empirical var of A_50: {noisy.var():.4f} vs 1 - bar_alpha_50 = "
      f"{1 - sch.alphas_cumprod[49]:.4f}")

# overfit one trajectory
cfg = UNetConfig(action_dim=2, horizon=16, cond_dim=8, widths=(16, 32), time_dim=16)
params: Params = {}
init_unet(params, rng, cfg)
target = np.tanh(np.linspace(-2, 2, 16))[:, None] * np.array([0.5, -0.3])
target = target[None].astype(np.float32)
cond = ad.tensor(rng.normal(size=(1, 8)), dtype=np.float32)
opt = AdamW(trainable(params), lr=2e-3, weight_decay=0.0)

batch = 32
for step in range(1, 801):
    opt.zero_grad()
    k = rng.integers(1, 101, size=batch)
    e = rng.standard_normal((batch, 16, 2)).astype(np.float32)
    a_k = add_noise(np.repeat(target, batch, 0), e, k, sch)
    cond_b = ad.tensor(np.repeat(cond.data, batch, 0), dtype=np.float32)
    eps_hat = predict_noise(params, ad.tensor(a_k, dtype=np.float32), k, cond_b, cfg)
    d = ad.sub(eps_hat, ad.tensor(e, dtype=np.float32))
    loss = ad.mean(ad.mul(d, d))
    ad.backward(loss, leaves=opt.params)
    opt.step()
    if step % 200 == 0:
        print(f"step {step}: noise-prediction loss {float(loss.data):.5f}")


def predict(a_k, k):
    with ad.no_grad():
        return predict_noise(params, ad.tensor(a_k, dtype=np.float32),
                             np.array([k]), cond, cfg).data


draw = sample(predict, sch, (16, 2), seed=1)
err = np.linalg.norm(draw - target[0])
print(f"sampled trajectory L2 distance to the training target: {err:.4f}")
