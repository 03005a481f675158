import pytest
from hypothesis import given
from hypothesis import strategies as st

from wordnetworks.ingest import (AttributionProblem, Corpus, Document,
                                 load_corpus, load_problem, tokenize)


class TestTokenize:
    def test_fox_sentence(self):
        assert tokenize("The quick brown fox jumped over the lazy dog.") == [
            "the", "quick", "brown", "fox", "jumped", "over", "the", "lazy", "dog",
        ]

    def test_empty(self):
        assert tokenize("") == []

    def test_internal_apostrophe_kept(self):
        assert tokenize("Don't stop -- don't!") == ["don't", "stop", "don't"]

    def test_digits_kept(self):
        assert tokenize("Chapter 42, verse 7") == ["chapter", "42", "verse", "7"]

    def test_sentence_boundary_ignored(self):
        # last word of one sentence still neighbors the first of the next
        assert tokenize("End. Start") == ["end", "start"]

    @given(st.text(max_size=200))
    def test_no_separators_inside_tokens(self, text):
        for tok in tokenize(text):
            assert tok
            assert tok == tok.lower()
            assert not any(c.isspace() or c in ".,;:!?-\"()" for c in tok)

    @given(st.text(max_size=200))
    def test_idempotent_on_own_output(self, text):
        toks = tokenize(text)
        assert tokenize(" ".join(toks)) == toks


def _write_corpus(root, layout):
    for author, docs in layout.items():
        adir = root / author
        adir.mkdir(parents=True)
        for name, text in docs.items():
            (adir / name).write_text(text, encoding="utf-8")


class TestLoadCorpus:
    def test_structure(self, tmp_path):
        _write_corpus(tmp_path, {
            "A": {"d1.txt": "a b", "d2.txt": "c"},
            "B": {"d1.txt": "x", "d2.txt": "y", "d3.txt": "z"},
        })
        corpus = load_corpus(tmp_path)
        assert len(corpus) == 5
        assert corpus.authors == {"A", "B"}
        assert [d.doc_id for d in corpus.documents] == sorted(
            d.doc_id for d in corpus.documents
        )

    def test_tokenization_composed(self, tmp_path):
        _write_corpus(tmp_path, {"A": {"d.txt": "a b a"}})
        corpus = load_corpus(tmp_path)
        assert corpus.documents[0].tokens == ("a", "b", "a")
        assert corpus.documents[0].author == "A"

    def test_non_utf8_file_named_in_error(self, tmp_path):
        _write_corpus(tmp_path, {"A": {"ok.txt": "fine"}})
        bad = tmp_path / "A" / "bad.txt"
        bad.write_bytes(b"\xff\xfe broken \xff")
        with pytest.raises(ValueError, match="bad.txt"):
            load_corpus(tmp_path)

    def test_empty_corpus_rejected(self, tmp_path):
        with pytest.raises(ValueError, match="empty corpus"):
            load_corpus(tmp_path)

    def test_roundtrip_reserialization(self, tmp_path):
        _write_corpus(tmp_path, {"A": {"d.txt": "the cat sat"}, "B": {"e.txt": "a dog ran"}})
        first = load_corpus(tmp_path)
        out = tmp_path / "rt"
        for doc in first.documents:
            path = out / doc.doc_id
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(" ".join(doc.tokens), encoding="utf-8")
        second = load_corpus(out)
        assert len(second) == len(first)
        assert [d.tokens for d in second.documents] == [d.tokens for d in first.documents]


class TestLoadProblem:
    def _make(self, tmp_path, truth_lines):
        _write_corpus(tmp_path / "train", {
            "A": {"d1.txt": "alpha beta"},
            "B": {"d1.txt": "gamma delta"},
            "C": {"d1.txt": "epsilon zeta"},
        })
        test_dir = tmp_path / "test"
        test_dir.mkdir()
        for name in ("t1.txt", "t2.txt", "t3.txt", "t4.txt"):
            (test_dir / name).write_text("alpha gamma", encoding="utf-8")
        truth = tmp_path / "truth.tsv"
        truth.write_text("\n".join(truth_lines) + "\n", encoding="utf-8")
        return tmp_path / "train", test_dir, truth

    def test_valid_problem(self, tmp_path):
        args = self._make(tmp_path, ["t1.txt\tA", "t2.txt\tB", "t3.txt\tC", "t4.txt\tA"])
        problem = load_problem(*args)
        assert len(problem.test) == 4
        assert problem.truth["t2.txt"] == "B"
        assert problem.train.authors == {"A", "B", "C"}

    def test_unknown_author_rejected(self, tmp_path):
        args = self._make(tmp_path, ["t1.txt\tA", "t2.txt\tB", "t3.txt\tC", "t4.txt\tZ"])
        with pytest.raises(ValueError, match="closed-class"):
            load_problem(*args)

    def test_missing_truth_row_rejected(self, tmp_path):
        args = self._make(tmp_path, ["t1.txt\tA", "t2.txt\tB", "t3.txt\tC"])
        with pytest.raises(ValueError, match="missing"):
            load_problem(*args)


class TestInvariants:
    def test_duplicate_doc_ids_rejected(self):
        docs = (
            Document("x", "A", ("a",)),
            Document("x", "B", ("b",)),
        )
        with pytest.raises(ValueError, match="duplicate"):
            Corpus(docs)

    def test_empty_token_rejected(self):
        with pytest.raises(ValueError, match="empty token"):
            Document("x", "A", ("a", ""))

    def test_truth_must_cover_test_exactly(self):
        train = Corpus((Document("a/1", "A", ("x",)), Document("b/1", "B", ("y",))))
        test = (Document("t1", None, ("x",)),)
        with pytest.raises(ValueError, match="exactly"):
            AttributionProblem(train, test, {"t1": "A", "t9": "B"})
