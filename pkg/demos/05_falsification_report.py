"""Checking the method against an exact oracle on many small graphs."""

from collections import Counter

from grinham import generate_corpus, run_corpus

spec = {
    "seed": 7,
    "parts": [
        {"kind": "named"},
        {"kind": "random", "n_min": 6, "n_max": 12, "p": 0.4, "count": 500, "seed": 7},
        {"kind": "exhaustive_labeled", "n_max": 6},
    ],
}
corpus = generate_corpus(spec)
print(len(corpus), "graphs")

# %% rows: method verdict, oracle verdict
report = run_corpus(corpus)
for method, row in report.matrix.items():
    print(f"method {method:10s} oracle Ham {row['Ham']:5d}  oracle NonHam {row['NonHam']:5d}")

# %% Hamiltonian verdicts are always certified, but many Hamiltonian graphs get rejected
wrong = Counter(r["reason"] for r in report.rows if r["agree"] is False and r["method"] == "NotHamiltonian")
print("false rejections by reason:", dict(wrong))

# %% runs that finished deleting yet left no Hamiltonian cycle
stuck = [r["id"] for r in report.rows if r["method"] == "MethodIncomplete"]
print(len(stuck), "incomplete:", stuck[:5])
