import qtoda


def test_supported_table():
    assert qtoda.supported("A", 2)
    assert qtoda.supported("G", 2)
    assert qtoda.supported("D", 4)
    assert not qtoda.supported("A", 5)
    assert not qtoda.supported("E", 6)


def test_weyl_orders_and_degrees():
    assert qtoda.weyl_order("A", 2) == 6
    assert qtoda.weyl_order("B", 2) == 8
    assert qtoda.weyl_order("G", 2) == 12
    assert qtoda.fundamental_degrees("A", 3) == [2, 3, 4]
    assert qtoda.fundamental_degrees("B", 2) == [2, 4]


def test_cartan_matrix():
    assert qtoda.cartan_matrix("A", 2) == [["2", "-1"], ["-1", "2"]]


def test_gram_positive_definite():
    for t, r in [("A", 1), ("A", 4), ("B", 3), ("C", 3), ("D", 4), ("G", 2)]:
        assert qtoda.gram_positive_definite(t, r)


def test_session_a1_closed_forms():
    s = qtoda.Session("A", 1)
    assert s.weyl_order == 2
    assert s.degrees() == [2]
    # F_1 = 2 L^2 + Q over (Q1, L1), terms in graded-lex order.
    assert s.conserved_quantities() == [[([0, 2], "2"), ([1, 0], "1")]]
    # Multiplication by sigma_s in the (sigma_s, sigma_e) basis:
    # sigma_s . sigma_e = sigma_s, sigma_s . sigma_s = q sigma_e.
    assert s.quantum_matrix(0) == [
        [[], [([0], "1")]],
        [[([1], "1")], []],
    ]


def test_session_verification():
    s = qtoda.Session("A", 2)
    assert all(c["pass"] for c in s.verify_hypotheses())
    assert all(c["pass"] for c in s.verify_relations())
    assert s.commutators_vanish()
    assert s.flat_sections_vanish(order=2)


def test_run_pipeline_deterministic():
    a = qtoda.run_pipeline("A", 1)
    b = qtoda.run_pipeline("A", 1)
    assert a["pass"] and b["pass"]
    assert a["report_json"] == b["report_json"]
