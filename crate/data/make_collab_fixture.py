"""Regenerates fixtures/collab_small.txt (deterministic)."""
import random

rng = random.Random(20190415)
groups = []
nxt = 0
for _ in range(120):
    size = min(4 + int(rng.paretovariate(1.5) * 3), 60)
    groups.append(list(range(nxt, nxt + size)))
    nxt += size
edges = set()
for _ in range(2500):
    g = rng.choice(groups)
    size = min(2 + int(rng.expovariate(0.5)), len(g), 8)
    team = set(rng.sample(g, size))
    if rng.random() < 0.2:
        team.add(rng.choice(rng.choice(groups)))
    team = sorted(team)
    for i, a in enumerate(team):
        for b in team[i + 1:]:
            edges.add((a, b))
with open("fixtures/collab_small.txt", "w") as f:
    f.write("# synthetic co-authorship network: research groups, one clique per paper\n")
    for a, b in sorted(edges):
        f.write(f"{a} {b}\n")
