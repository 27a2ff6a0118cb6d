"""Certifying the bounds over a whole corpus in one sweep.

The verifier runs four checks per graph and radius: the progressing-move
bound, witness soundness and size, containment of progressing moves in ball
witnesses, and a sampled invariant battery (monotonicity, deletion
sandwich, value dichotomy, component decomposition, oracle agreement).
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from splittergame import corpus_all_labeled, corpus_families, run_corpus

for corpus in (corpus_all_labeled(4, (1, 2)), corpus_families(12, (1, 2))):
    report = run_corpus(corpus)
    print(f"corpus {corpus.name!r}: {len(corpus.entries)} graphs, radii {list(corpus.radii)}")
    print(f"  records: {len(report.results)}, violations: {len(report.violations)}, "
          f"pass: {report.passed}")
    ranks = [rec["rank"] for rec in report.results if "rank" in rec]
    print(f"  rank range seen: {min(ranks)}..{max(ranks)}")
    witness_sizes = [rec["witness_size"] for rec in report.results if "witness_size" in rec]
    print(f"  largest witness: {max(witness_sizes)} vertices\n")

# Reports serialize deterministically; same corpus spec, same bytes.
again = run_corpus(corpus_all_labeled(4, (1, 2)))
assert again.to_json() == run_corpus(corpus_all_labeled(4, (1, 2))).to_json()
print("report bytes are reproducible for a fixed corpus spec")
