"""The synthetic benchmark: scripted experts and the evaluation protocol.

Generates a handful of demonstrations for both tasks, saves them in the
episode format, and scores the scripted expert and a random-action baseline
under the exact protocol used for trained policies.
"""

import pathlib

import numpy as np

from remap.datasets import generate_demos, load_episodes, save_episodes
from remap.imageio import write_ppm
from remap.toybench import BenchConfig, ExpertPolicy, RandomPolicy, evaluate

out = pathlib.Path(__file__).parent / "output"
out.mkdir(exist_ok=True)
bench = BenchConfig()

for task in ("reach", "push"):
    episodes = generate_demos(task, count=5, seed=0, config=bench)
    path = out / f"demos_{task}.rmep"
    save_episodes(path, episodes)
    steps = [ep.steps for ep in episodes]
    print(f"{task}: {len(episodes)} expert episodes of {min(steps)}-{max(steps)} steps -> {path.name}")

# sensor strip from the first push episode
ep = load_episodes(out / "demos_push.rmep")[0]
strip = np.concatenate([ep.rgb[t, 0] for t in (0, ep.steps // 2, ep.steps - 1)], axis=1)
write_ppm(out / "push_episode_strip.ppm", strip)
print(f"wrote a first/middle/last sensor strip to {out / 'push_episode_strip.ppm'}")

for task in ("reach", "push"):
    expert = evaluate(ExpertPolicy(bench), task, trials=25, seed=1, config=bench)
    random = evaluate(RandomPolicy(bench), task, trials=25, seed=1, config=bench)
    print(f"{task}: expert success {expert.success_rate:.2f}, "
          f"random baseline {random.success_rate:.2f}")
