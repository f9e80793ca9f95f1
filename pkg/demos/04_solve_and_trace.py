"""End-to-end solving, with the step trace."""

from grinham import Graph, SolverConfig, generate_named, solve
from grinham.pipeline import replay_trace

# %% small cases
for name, params in [("cycle", [6]), ("complete", [4]), ("petersen", []), ("grid", [3, 4])]:
    verdict, trace = solve(generate_named(name, params))
    print(f"{name:9s} {verdict.outcome:16s} {verdict.reason or '':12s} {verdict.cycle}")

# %% the trace, one JSON record per step
verdict, trace = solve(generate_named("complete", [4]))
for line in trace.to_jsonl().splitlines():
    print(line[:110])
print("replays:", replay_trace(trace.to_jsonl()))

# %% greedy deletion can paint itself into a corner; bounded undo sometimes helps
g = Graph(9, ((1, 2), (1, 3), (1, 6), (2, 6), (2, 7), (2, 8), (3, 4), (3, 5), (3, 9),
              (4, 5), (4, 6), (5, 8), (6, 8), (7, 8), (8, 9)))
print(solve(g)[0].to_json())
print(solve(g, SolverConfig(undo_limit=8))[0].to_json())
