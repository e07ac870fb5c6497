use serde::Serialize;

use super::ast::Law;
use super::parser::parse_law;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LawKind {
    /// Expected to hold in every model.
    Holds,
    /// Expected to be violated in the named fixture model.
    ExpectedFail { fixture: &'static str },
    /// An axiom of a structure; checked against the candidate relations
    /// a model supplies under the variable names, skipped otherwise.
    Axiom,
}

#[derive(Debug, Clone, Serialize)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub anchor: &'static str,
    pub kind: LawKind,
    pub source: &'static str,
    pub note: Option<&'static str>,
}

impl CatalogEntry {
    pub fn law(&self) -> Law {
        parse_law(self.source).unwrap_or_else(|e| panic!("catalog law {} does not parse: {e}", self.id))
    }
}

const fn holds(id: &'static str, anchor: &'static str, source: &'static str) -> CatalogEntry {
    CatalogEntry { id, anchor, kind: LawKind::Holds, source, note: None }
}

const fn noted(id: &'static str, anchor: &'static str, source: &'static str, note: &'static str) -> CatalogEntry {
    CatalogEntry { id, anchor, kind: LawKind::Holds, source, note: Some(note) }
}

const fn axiom(id: &'static str, anchor: &'static str, source: &'static str) -> CatalogEntry {
    CatalogEntry { id, anchor, kind: LawKind::Axiom, source, note: None }
}

const RNO: &str = "only meaningful under the real number object axioms; no finite model satisfies them, so finite checks are vacuous";

static CATALOG: &[CatalogEntry] = &[
    // Heyting category axioms
    holds(
        "hAxiom1",
        "hom-sets are Heyting algebras",
        "law hAxiom1 ; var Q, R, S : A -> B
         ; conclude (Q & S <= R <=> S <= Q -> R) and Q & (R | S) = Q & R | Q & S",
    ),
    holds("hAxiom2", "composition with bottom", "law hAxiom2 ; sort C ; var Q : A -> B ; conclude Q ; bot[B,C] = bot[A,C]"),
    holds(
        "hAxiom3",
        "converse is a monotone involution reversing composition",
        "law hAxiom3 ; var Q, T : A -> B ; var R : B -> C
         ; conclude conv(Q ; R) = conv(R) ; conv(Q) and conv(conv(Q)) = Q and (Q <= T => conv(Q) <= conv(T))",
    ),
    holds(
        "hAxiom4",
        "modular inclusion",
        "law hAxiom4 ; var Q : A -> B ; var R : B -> C ; var S : A -> C
         ; conclude Q ; R & S <= Q ; (R & conv(Q) ; S)",
    ),
    holds(
        "hAxiom5",
        "right residual adjunction",
        "law hAxiom5 ; var X : A -> B ; var R : B -> C ; var S : A -> C
         ; conclude X ; R <= S <=> X <= rres(S, R)",
    ),
    holds(
        "compReg",
        "Q and R are regular",
        "law compReg ; var Q, R : A -> B ; assume complemented(Q, R)
         ; conclude star(Q) = R and star(R) = Q and regular(Q) and regular(R)",
    ),
    holds(
        "schroeder",
        "Schroeder equivalences",
        "law schroeder ; var Q : A -> B ; var R : B -> C ; var S : A -> C
         ; conclude Q ; R <= star(S) <=> conv(Q) ; S <= star(R) <=> S ; conv(R) <= star(Q)",
    ),
    holds("resNeg1", "pseudo-complement commutes with converse", "law resNeg1 ; var Q : A -> B ; conclude star(conv(Q)) = conv(star(Q))"),
    holds(
        "resNeg2",
        "rres(R*,S) = (R**;S^T)*",
        "law resNeg2 ; var R : A -> C ; var S : B -> C ; conclude rres(star(R), S) = star(star(star(R)) ; conv(S))",
    ),
    holds(
        "resNeg3",
        "lres(Q,R*) = (Q^T;R**)*",
        "law resNeg3 ; var Q : A -> B ; var R : A -> C ; conclude lres(Q, star(R)) = star(conv(Q) ; star(star(R)))",
    ),
    holds(
        "basics1",
        "partial identities are symmetric",
        "law basics1 ; var i : A -> A ; assume partial_identity(i) ; conclude conv(i) = i",
    ),
    holds(
        "basics2",
        "i;j = i meet j",
        "law basics2 ; var i, j : A -> A ; assume partial_identity(i) ; assume partial_identity(j)
         ; conclude i ; j = i & j and i ; i = i",
    ),
    holds(
        "basics3",
        "(Q;top meet R);S = Q;top meet R;S",
        "law basics3 ; var Q : A -> B ; var R : A -> C ; var S : C -> D
         ; conclude (Q ; top[B,C] & R) ; S = Q ; top[B,D] & R ; S",
    ),
    holds(
        "maps1",
        "shunting a map",
        "law maps1 ; var f : A -> B ; var Q : C -> A ; var R : C -> B ; assume map(f)
         ; conclude Q ; f <= R <=> Q <= R ; conv(f)",
    ),
    holds(
        "maps2",
        "univalent distribution over meet on the right",
        "law maps2 ; var g : B -> A ; var Q : C -> A ; var R : C -> B ; assume univalent(g)
         ; conclude (Q ; conv(g) & R) ; g = Q & R ; g",
    ),
    noted(
        "maps3",
        "univalent distribution over meet on the left",
        "law maps3 ; var g : B -> A ; var T, U : A -> D ; assume univalent(g)
         ; conclude g ; (T & U) = g ; T & g ; U",
        "the source statement writes f on the right-hand side; read as g, the only well-typed and valid reading",
    ),
    holds(
        "resBasics1",
        "residual cancellation",
        "law resBasics1 ; var Q : A -> B ; var R : A -> C ; var S : B -> C
         ; conclude Q ; lres(Q, R) <= R and rres(R, S) ; S <= R",
    ),
    holds(
        "resBasics2",
        "maps move into residuals",
        "law resBasics2 ; var Q : A -> B ; var R : A -> C ; var S : B -> C ; var f : D -> B ; assume map(f)
         ; conclude f ; lres(Q, R) = lres(Q ; conv(f), R) and rres(R, S) ; conv(f) = rres(R, f ; S)",
    ),
    holds(
        "resBasics3",
        "converse of a symmetric quotient",
        "law resBasics3 ; var Q : A -> B ; var R : A -> C ; conclude conv(syq(Q, R)) = syq(R, Q)",
    ),
    holds(
        "resBasics4",
        "maps move into symmetric quotients",
        "law resBasics4 ; var Q : A -> B ; var R : A -> C ; var f : D -> B ; assume map(f)
         ; conclude f ; syq(Q, R) = syq(Q ; conv(f), R)",
    ),
    // products
    holds(
        "prodAxioms",
        "pi^T;rho = top",
        "law prodAxioms ; sort A, B
         ; conclude conv(pi[A,B]) ; pi[A,B] <= I[A] and conv(rho[A,B]) ; rho[A,B] <= I[B]
           and pi[A,B] ; conv(pi[A,B]) & rho[A,B] ; conv(rho[A,B]) = I[A*B] and conv(pi[A,B]) ; rho[A,B] = top[A,B]",
    ),
    holds(
        "products1",
        "converse of fork and pair",
        "law products1 ; var Q : C -> A ; var R : C -> B ; var T : A -> C ; var U : B -> C
         ; conclude conv(fork(Q, R)) = pair(conv(Q), conv(R)) and conv(pair(T, U)) = fork(conv(T), conv(U))",
    ),
    holds(
        "products2",
        "projections cancel forks",
        "law products2 ; var Q : C -> A ; var R : C -> B
         ; conclude (total(R) => fork(Q, R) ; pi[A,B] = Q) and (total(Q) => fork(Q, R) ; rho[A,B] = R)",
    ),
    holds(
        "products3",
        "projections cancel pairs",
        "law products3 ; var Q : A -> C ; var S : B -> C
         ; conclude (surjective(S) => conv(pi[A,B]) ; pair(Q, S) = Q) and (surjective(Q) => conv(rho[A,B]) ; pair(Q, S) = S)",
    ),
    holds(
        "products4",
        "univalent relations distribute over forks",
        "law products4 ; var f : D -> C ; var Q : C -> A ; var R : C -> B ; var T : A -> C ; var U : B -> C ; var g : C -> D
         ; conclude (univalent(f) => f ; fork(Q, R) = fork(f ; Q, f ; R))
           and (injective(g) => pair(T, U) ; g = pair(T ; g, U ; g))",
    ),
    holds(
        "products5",
        "(Q fork R);(T pair U) = Q;T meet R;U",
        "law products5 ; var Q : C -> A ; var R : C -> B ; var T : A -> D ; var U : B -> D
         ; conclude fork(Q, R) ; pair(T, U) = Q ; T & R ; U",
    ),
    holds(
        "products6",
        "tensor absorbs forks and pairs",
        "law products6 ; var Q : C -> A ; var R : C -> B ; var T : A -> D ; var V : B -> D
         ; var K : A -> C ; var X : B -> D ; var M : C -> A ; var N : D -> A
         ; conclude fork(Q, R) ; tensor(T, V) = fork(Q ; T, R ; V) and tensor(K, X) ; pair(M, N) = pair(K ; M, X ; N)",
    ),
    holds(
        "products7",
        "reassociating a pair of a fork",
        "law products7 ; var Q : A -> C ; var R : B -> C ; var S : B -> D
         ; conclude pair(Q ; conv(pi[C,D]), fork(R, S)) = fork(pair(Q, R), rho[A,B] ; S)",
    ),
    holds("assocSwap1", "swap is its own converse", "law assocSwap1 ; sort A, B ; conclude conv(swap[A,B]) = swap[B,A]"),
    holds(
        "assocSwap2",
        "swap exchanges fork and pair components",
        "law assocSwap2 ; var Q : C -> A ; var R : C -> B ; var T : B -> D ; var U : A -> D
         ; conclude fork(Q, R) ; swap[A,B] = fork(R, Q) and swap[A,B] ; pair(T, U) = pair(U, T)",
    ),
    holds(
        "assocSwap3",
        "swap commutes with tensor",
        "law assocSwap3 ; var Q : B -> D ; var T : A -> C
         ; conclude swap[A,B] ; tensor(Q, T) = tensor(T, Q) ; swap[C,D]",
    ),
    holds(
        "assocSwap4",
        "assoc reassociates forks and pairs",
        "law assocSwap4 ; var U : D -> A ; var Q : D -> B ; var R : D -> C ; var K : A -> D ; var S : B -> D ; var V : C -> D
         ; conclude fork(U, fork(Q, R)) ; assoc[A,B,C] = fork(fork(U, Q), R)
           and assoc[A,B,C] ; pair(pair(K, S), V) = pair(K, pair(S, V))",
    ),
    holds(
        "assocSwap5",
        "assoc is natural",
        "law assocSwap5 ; var Q : A -> B ; var T : B -> C ; var X : C -> A
         ; conclude assoc[A,B,C] ; tensor(tensor(Q, T), X) = tensor(Q, tensor(T, X)) ; assoc[B,C,A]",
    ),
    // abelian groups
    holds(
        "groupProps1",
        "associativity through assoc converse",
        "law groupProps1 ; var e : 1 -> A ; var f : A*A -> A ; var n : A -> A ; assume abelian_group(e, f, n)
         ; conclude conv(assoc[A,A,A]) ; tensor(I[A], f) ; f = tensor(f, I[A]) ; f",
    ),
    holds(
        "groupProps2",
        "neutral and inverse on the left",
        "law groupProps2 ; var e : 1 -> A ; var f : A*A -> A ; var n : A -> A ; assume abelian_group(e, f, n)
         ; conclude fork(top[A,1] ; e, I[A]) ; f = I[A] and fork(n, I[A]) ; f = top[A,1] ; e",
    ),
    holds(
        "groupProps3",
        "inverses are unique",
        "law groupProps3 ; var e : 1 -> A ; var f : A*A -> A ; var n : A -> A ; var g, h : A -> A
         ; assume abelian_group(e, f, n) ; assume map(g) ; assume map(h) ; assume fork(g, h) ; f = top[A,1] ; e
         ; conclude g ; n = h",
    ),
    holds(
        "groupProps4",
        "(n tensor n);f;n = f",
        "law groupProps4 ; var e : 1 -> A ; var f : A*A -> A ; var n : A -> A ; assume abelian_group(e, f, n)
         ; conclude tensor(n, n) ; f ; n = f",
    ),
    // strict orders and bounds
    holds(
        "strictComp1",
        "a linear strict order is irreflexive",
        "law strictComp1 ; var C : A -> A ; assume linear_strict_order(C) ; conclude C & I[A] = bot[A,A]",
    ),
    holds(
        "strictComp2",
        "complemented with complement E^T",
        "law strictComp2 ; var C : A -> A ; def E = I[A] | C ; assume linear_strict_order(C)
         ; conclude complemented(C, conv(E))",
    ),
    holds(
        "strictComp3",
        "C* = E^T and E* = C^T",
        "law strictComp3 ; var C : A -> A ; def E = I[A] | C ; assume linear_strict_order(C)
         ; conclude star(C) = conv(E) and star(E) = conv(C)",
    ),
    holds(
        "strictComp4",
        "C and E are regular",
        "law strictComp4 ; var C : A -> A ; def E = I[A] | C ; assume linear_strict_order(C)
         ; conclude regular(C) and regular(E)",
    ),
    holds(
        "boundLemma",
        "ubd_E(X);E = ubd_E(X)",
        "law boundLemma ; var E : A -> A ; var X : B -> A ; assume ordering(E)
         ; conclude ubd(E, X) ; E = ubd(E, X) and lbd(E, X) ; conv(E) = lbd(E, X)",
    ),
    holds(
        "downClosed",
        "lub_E(X);C^T below (X;C^T)**",
        "law downClosed ; var C : B -> B ; var X : A -> B ; def E = I[B] | C ; assume linear_strict_order(C)
         ; conclude lub(E, X) ; conv(C) <= star(star(X ; conv(C)))",
    ),
    CatalogEntry {
        id: "downClosedNoStar",
        anchor: "the double negation cannot be dropped",
        kind: LawKind::ExpectedFail { fixture: "paper3chain" },
        source: "law downClosedNoStar ; var C : B -> B ; var X : A -> B ; def E = I[B] | C ; assume linear_strict_order(C)
         ; conclude lub(E, X) ; conv(C) <= X ; conv(C)",
        note: Some("violated at C = ((0 1) (0 0)), X = (0 u) over the 3-chain"),
    },
    // powers
    holds(
        "powerAxioms",
        "syq(eps,eps) = I and syq(Q,eps) total",
        "law powerAxioms ; var Q : A -> B ; conclude syq(eps[A], eps[A]) = I[P(A)] and total(syq(Q, eps[A]))",
    ),
    noted(
        "powerBasic",
        "syq(R^T,eps);eps^T = R",
        "law powerBasic ; var R : B -> A ; conclude syq(conv(R), eps[A]) ; conv(eps[A]) = R",
        "R is typed B -> A so that syq(R^T, eps) is defined",
    ),
    holds(
        "nePowerAxioms",
        "dom(syq(Q,eps)) = dom(Q^T)",
        "law nePowerAxioms ; var Q : A -> B
         ; conclude syq(neps[A], neps[A]) = I[NP(A)] and dom(syq(Q, neps[A])) = dom(conv(Q))",
    ),
    noted(
        "nePowerBasic",
        "syq(R^T,eps);eps^T = R for non-empty powers",
        "law nePowerBasic ; var R : B -> A ; conclude syq(conv(R), neps[A]) ; conv(neps[A]) = R",
        "R is typed B -> A so that syq(R^T, eps) is defined",
    ),
    // real number objects
    axiom("rnoAxioms0", "add is a map", "law rnoAxioms0 ; var add : R*R -> R ; conclude map(add)"),
    axiom(
        "rnoAxioms1",
        "C is linear",
        "law rnoAxioms1 ; var C : R -> R ; conclude I[R] | C | conv(C) = top[R,R]",
    ),
    axiom("rnoAxioms2", "C is asymmetric", "law rnoAxioms2 ; var C : R -> R ; conclude C & conv(C) = bot[R,R]"),
    axiom("rnoAxioms3", "C is dense", "law rnoAxioms3 ; var C : R -> R ; conclude C <= C ; C"),
    axiom(
        "rnoAxioms4",
        "separated non-empty sets have a separating element",
        "law rnoAxioms4 ; var C : R -> R
         ; conclude lres(neps[R], rres(C, conv(neps[R]))) <= lres(neps[R], C | I[R]) ; conv(lres(neps[R], conv(C | I[R])))",
    ),
    axiom(
        "rnoAxioms5",
        "add is associative and commutative in the mixed form",
        "law rnoAxioms5 ; var add : R*R -> R
         ; conclude tensor(I[R], add) ; add = tensor(I[R], swap[R,R]) ; assoc[R,R,R] ; tensor(add, I[R]) ; add",
    ),
    axiom(
        "rnoAxioms6",
        "every difference exists",
        "law rnoAxioms6 ; var add : R*R -> R ; conclude conv(pi[R,R]) ; add = top[R,R]",
    ),
    axiom(
        "rnoAxioms7",
        "add reflects the order",
        "law rnoAxioms7 ; var C : R -> R ; var add : R*R -> R
         ; conclude add ; C ; conv(add) <= pi[R,R] ; C ; conv(pi[R,R]) | rho[R,R] ; C ; conv(rho[R,R])",
    ),
    axiom("rnoAxioms8", "i is a point", "law rnoAxioms8 ; var i : 1 -> R ; conclude point(i)"),
    axiom(
        "rnoAxioms9",
        "1 < 1 + 1",
        "law rnoAxioms9 ; var i : 1 -> R ; var C : R -> R ; var add : R*R -> R
         ; conclude i <= i ; fork(I[R], I[R]) ; add ; conv(C)",
    ),
    noted(
        "addGroup",
        "is an abelian group",
        "law addGroup ; var i : 1 -> R ; var add : R*R -> R ; var C : R -> R
         ; def zero = top[1,R] ; (conv(add) & conv(pi[R,R])) ; rho[R,R]
         ; def Z = top[R,1] ; zero
         ; def neg = conv(pi[R,R]) ; (add ; conv(Z) & rho[R,R])
         ; assume point(i) ; assume map(add) ; assume rno(i, C, add)
         ; conclude abelian_group(zero, add, neg)",
        RNO,
    ),
    noted(
        "cLinearDense",
        "dense strict linear order",
        "law cLinearDense ; var i : 1 -> R ; var add : R*R -> R ; var C : R -> R
         ; assume point(i) ; assume map(add) ; assume rno(i, C, add)
         ; conclude linear_strict_order(C) and dense(C)",
        RNO,
    ),
    noted(
        "addMono1",
        "strictly monotone in each parameter",
        "law addMono1 ; var i : 1 -> R ; var add : R*R -> R ; var C : R -> R
         ; assume point(i) ; assume map(add) ; assume rno(i, C, add)
         ; conclude tensor(I[R], C) ; add <= add ; C and tensor(C, I[R]) ; add <= add ; C",
        RNO,
    ),
    noted(
        "addMono2",
        "add is strictly monotone",
        "law addMono2 ; var i : 1 -> R ; var add : R*R -> R ; var C : R -> R
         ; assume point(i) ; assume map(add) ; assume rno(i, C, add)
         ; conclude tensor(C, C) ; add <= add ; C",
        RNO,
    ),
    noted(
        "addMono3",
        "add is monotone",
        "law addMono3 ; var i : 1 -> R ; var add : R*R -> R ; var C : R -> R ; def E = I[R] | C
         ; assume point(i) ; assume map(add) ; assume rno(i, C, add)
         ; conclude tensor(E, E) ; add <= add ; E",
        RNO,
    ),
    noted(
        "shiftBijective",
        "strictly monotone and a bijective map",
        "law shiftBijective ; var i : 1 -> R ; var add : R*R -> R ; var C : R -> R ; var p : 1 -> R
         ; def zero = top[1,R] ; (conv(add) & conv(pi[R,R])) ; rho[R,R]
         ; def Z = top[R,1] ; zero
         ; def neg = conv(pi[R,R]) ; (add ; conv(Z) & rho[R,R])
         ; def sh = fork(I[R], top[R,1] ; p) ; add
         ; assume point(i) ; assume map(add) ; assume rno(i, C, add) ; assume point(p)
         ; conclude bijection(sh) and C ; sh <= sh ; C and conv(sh) = fork(I[R], top[R,1] ; p ; neg) ; add",
        RNO,
    ),
    noted(
        "props1",
        "succ;neg = neg;prec",
        "law props1 ; var i : 1 -> R ; var add : R*R -> R ; var C : R -> R
         ; def zero = top[1,R] ; (conv(add) & conv(pi[R,R])) ; rho[R,R]
         ; def Z = top[R,1] ; zero
         ; def neg = conv(pi[R,R]) ; (add ; conv(Z) & rho[R,R])
         ; def succ = fork(I[R], top[R,1] ; i) ; add
         ; def prec = fork(I[R], top[R,1] ; i ; neg) ; add
         ; assume point(i) ; assume map(add) ; assume rno(i, C, add)
         ; conclude succ ; neg = neg ; prec",
        RNO,
    ),
    noted(
        "props2",
        "0 below i;C^T",
        "law props2 ; var i : 1 -> R ; var add : R*R -> R ; var C : R -> R
         ; def zero = top[1,R] ; (conv(add) & conv(pi[R,R])) ; rho[R,R]
         ; assume point(i) ; assume map(add) ; assume rno(i, C, add)
         ; conclude zero <= i ; conv(C)",
        RNO,
    ),
    noted(
        "props3",
        "succ below C and prec below C^T",
        "law props3 ; var i : 1 -> R ; var add : R*R -> R ; var C : R -> R
         ; def zero = top[1,R] ; (conv(add) & conv(pi[R,R])) ; rho[R,R]
         ; def Z = top[R,1] ; zero
         ; def neg = conv(pi[R,R]) ; (add ; conv(Z) & rho[R,R])
         ; def succ = fork(I[R], top[R,1] ; i) ; add
         ; def prec = fork(I[R], top[R,1] ; i ; neg) ; add
         ; assume point(i) ; assume map(add) ; assume rno(i, C, add)
         ; conclude succ <= C and prec <= conv(C)",
        RNO,
    ),
    noted(
        "props4",
        "C is total and surjective",
        "law props4 ; var i : 1 -> R ; var add : R*R -> R ; var C : R -> R
         ; assume point(i) ; assume map(add) ; assume rno(i, C, add)
         ; conclude total(C) and surjective(C)",
        RNO,
    ),
    noted(
        "xcProps1",
        "dom X = dom(X;C^T)",
        "law xcProps1 ; var i : 1 -> R ; var add : R*R -> R ; var C : R -> R ; var X : A -> R
         ; assume point(i) ; assume map(add) ; assume rno(i, C, add)
         ; conclude dom(X) = dom(X ; conv(C))",
        RNO,
    ),
    noted(
        "xcProps2",
        "ubd_E(X) = ubd_E(X;C^T)",
        "law xcProps2 ; var i : 1 -> R ; var add : R*R -> R ; var C : R -> R ; var X : A -> R ; def E = I[R] | C
         ; assume point(i) ; assume map(add) ; assume rno(i, C, add)
         ; conclude ubd(E, X) = ubd(E, X ; conv(C))",
        RNO,
    ),
    noted(
        "lup",
        "dom X meet dom ubd_E(X) below dom lub_E(X)",
        "law lup ; var i : 1 -> R ; var add : R*R -> R ; var C : R -> R ; var X : A -> R ; def E = I[R] | C
         ; assume point(i) ; assume map(add) ; assume rno(i, C, add)
         ; conclude dom(X) & dom(ubd(E, X)) <= dom(lub(E, X))",
        RNO,
    ),
    noted(
        "lupEq",
        "with X;C^T regular",
        "law lupEq ; var i : 1 -> R ; var add : R*R -> R ; var C : R -> R ; var X : A -> R ; def E = I[R] | C
         ; assume point(i) ; assume map(add) ; assume rno(i, C, add) ; assume regular(X ; conv(C))
         ; conclude dom(X) & dom(ubd(E, X)) = dom(lub(E, X))",
        RNO,
    ),
    noted(
        "lupLinear",
        "least upper bounds on finite linear orders",
        "law lupLinear ; var E : R -> R ; var X : A -> R crisp
         ; assume ordering(E) ; assume E | conv(E) = top[R,R]
         ; conclude dom(X) & dom(ubd(E, X)) <= dom(lub(E, X))",
        "crisp surrogate of the least-upper-bound property on finite linear orders",
    ),
    CatalogEntry {
        id: "lupNoReg",
        anchor: "the equation needs X;C^T regular",
        kind: LawKind::ExpectedFail { fixture: "paper3chain" },
        source: "law lupNoReg ; var C : B -> B ; var X : A -> B ; def E = I[B] | C ; assume linear_strict_order(C)
         ; conclude dom(lub(E, X)) <= dom(X) & dom(ubd(E, X))",
        note: Some("violated at X = (0 u), where X;C^T = (u 0) is not regular"),
    },
];

/// Every law, in a fixed order.
pub fn catalog() -> &'static [CatalogEntry] {
    CATALOG
}

pub fn catalog_entry(id: &str) -> Option<&'static CatalogEntry> {
    CATALOG.iter().find(|e| e.id == id)
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::lawlang::{parse_law, typecheck_law};

    #[test]
    fn ids_and_anchors_are_unique() {
        let ids: BTreeSet<_> = catalog().iter().map(|e| e.id).collect();
        let anchors: BTreeSet<_> = catalog().iter().map(|e| e.anchor).collect();
        assert_eq!(ids.len(), catalog().len());
        assert_eq!(anchors.len(), catalog().len());
        assert!(catalog().len() >= 45);
    }

    #[test]
    fn every_law_parses_typechecks_and_round_trips() {
        for e in catalog() {
            let law = e.law();
            assert_eq!(law.id, e.id);
            typecheck_law(&law).unwrap_or_else(|err| panic!("{}: {err}", e.id));
            let printed = law.to_string();
            let again = parse_law(&printed).unwrap_or_else(|err| panic!("{}: {err}\n{printed}", e.id));
            assert_eq!(again, law, "{}", e.id);
            assert_eq!(again.to_string(), printed);
        }
    }

    #[test]
    fn expected_fail_entries() {
        let e = catalog_entry("downClosedNoStar").unwrap();
        assert_eq!(e.kind, LawKind::ExpectedFail { fixture: "paper3chain" });
        assert!(catalog_entry("nope").is_none());
    }
}
