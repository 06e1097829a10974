import pytest

from critlab.coloring import chromatic_number
from critlab.corpus import CorpusSpec, generate_corpus, gnp, known_chi, kneser, mycielski
from critlab.graph import GraphError
from critlab.oracles import chromatic_number_exhaustive

SPECS = [
    CorpusSpec("complete", {"n": 5}),
    CorpusSpec("mycielski", {"iterations": 0}),
    CorpusSpec("mycielski", {"iterations": 1}),
    CorpusSpec("mycielski", {"iterations": 2}),
    CorpusSpec("kneser", {"n": 5, "r": 2}),
    CorpusSpec("kneser", {"n": 7, "r": 2}),
    CorpusSpec("kneser", {"n": 7, "r": 3}),
    CorpusSpec("multipartite", {"parts": [1, 2, 3]}),
    CorpusSpec("cycle", {"n": 7}),
    CorpusSpec("cycle", {"n": 8}),
]


@pytest.mark.parametrize("spec", SPECS, ids=lambda s: f"{s.name}-{s.params}")
def test_known_chromatic_numbers(spec):
    assert chromatic_number(generate_corpus(spec))[0] == known_chi(spec.name, spec.params)


def test_small_ones_by_exhaustive_oracle():
    for spec in SPECS:
        g = generate_corpus(spec)
        if g.n <= 11:
            assert chromatic_number_exhaustive(g) == known_chi(spec.name, spec.params)


def test_sizes():
    assert (mycielski(1).n, mycielski(1).m) == (11, 20)
    assert (mycielski(2).n, mycielski(2).m) == (23, 71)
    petersen = kneser(5, 2)
    assert petersen.n == 10 and petersen.m == 15
    assert all(petersen.degree(v) == 3 for v in petersen.vertices)


def test_gnp_seeded():
    assert gnp(10, 0.4, 3) == gnp(10, 0.4, 3)
    assert gnp(10, 0.0, 1).m == 0 and gnp(6, 1.0, 1).m == 15


def test_spec_round_trip_and_errors():
    spec = CorpusSpec("gnp", {"n": 8, "p": 0.5}, seed=4)
    assert CorpusSpec.from_dict(spec.to_dict()) == spec
    assert generate_corpus(spec) == gnp(8, 0.5, 4)
    with pytest.raises(GraphError, match="unknown generator"):
        generate_corpus(CorpusSpec("nope"))
    with pytest.raises(GraphError, match="missing parameter"):
        generate_corpus(CorpusSpec("complete"))
