#!/usr/bin/env python3
"""Writes data/proofs/*.proof.

The registry files are the source of truth for the verifier; this script only
spares us typing out the index loops by hand. Re-run it after editing and
commit both.
"""
import argparse
import pathlib


def mul(*xs):
    return "(* " + " ".join(xs) + ")"


def sc(s, x):
    return f"(* [{s}] {x})"


def add(*xs):
    return "(+ " + " ".join(xs) + ")"


def sub(*xs):
    return "(- " + " ".join(xs) + ")"


def circ(x, y):
    return f"(o {x} {y})"


def lin(pairs):
    return add(*[sc(c, b) for c, b in pairs]) if len(pairs) > 1 else sc(*pairs[0])


class Case:
    def __init__(self, cid, fields, notes=()):
        self.lines = [f"case {cid}", "fields " + " ".join(fields)]
        self.lines += [f"note {n}" for n in notes]
        self.cid = cid

    def instance(self, label, algebra, sizes=(), params=(), matrix=None):
        self.lines += ["", f"instance {label}".rstrip(), f"algebra {algebra}"]
        self.lines += [f"size {k}={v}" for k, v in sizes]
        self.lines += [f"param {k}={v}" for k, v in params]
        if matrix:
            self.lines.append(f"matrix {matrix}")

    def symbols(self, names):
        self.lines.append("symbols " + " ".join(names))

    def subst(self, name, value):
        self.lines.append(f"subst {name} = {value}")

    def nonzero(self, names):
        self.lines.append("nonzero " + " ".join(names))

    def define(self, name, expr):
        self.lines.append(f"def {name} = {expr}")

    def rel(self, label, lhs, rhs):
        self.lines.append(f"id {label} : {lhs} = {rhs}")

    def member(self, label, expr, span):
        self.lines.append(f"member {label} : {expr} in " + " ".join(span))

    def emend(self, label, lhs, rhs, note):
        self.lines.append(f"emend {label} : {lhs} = {rhs}")
        self.lines.append(f"note {note}")

    def comment(self, text):
        self.lines.append(f"# {text}")

    def text(self):
        return "# generated by tools/gen_registry.py\n" + "\n".join(self.lines) + "\n"


# ---------------------------------------------------------------- associative

def assoc_case2(n=2):
    c = Case("assoc-case2", ["q", "gf3", "gf5"],
             ["M_n(D) with D = k[u], u odd, u^2 = lmb; the epsilon = k branch"])
    c.instance(f"n={n}", "division_super_2", sizes=[("quat", 0)], params=[("lambda", "lmb")], matrix=n)
    rng = range(1, n + 1)
    al = [f"alpha{i}{j}" for i in rng for j in rng]
    be = [f"beta{i}{j}" for i in rng for j in rng]
    c.symbols(al + be + ["z", "mu"])
    c.subst("mu", "lmb*z")
    c.nonzero(["z", "lmb"])
    c.define("a", lin([(f"alpha{i}{j}", f"1[{i}{j}]") for i in rng for j in rng] +
                      [(f"beta{i}{j}", f"1u[{i}{j}]") for i in rng for j in rng]))
    for i in rng:
        for j in rng:
            c.define(f"f{i}{j}", sc("z", f"1[{i}{j}]"))
    c.define("u", add(*[f"1u[{i}{i}]" for i in rng]))
    c.define("v", sc("z", "u"))
    for i in rng:
        for j in rng:
            lhs = add(*[mul(f"f{t}{i}", "a", f"f{j}{t}") for t in rng])
            c.rel(f"faf.{i}{j}", lhs, sc("z^2", add(f"[alpha{i}{j}]", sc(f"beta{i}{j}", "u"))))
    for i in rng:
        for j in rng:
            lhs = mul(sc("z^2", add(f"[alpha{i}{j}]", sc(f"beta{i}{j}", "u"))), "v")
            rhs = sc("z^2", add(sc(f"alpha{i}{j}", "v"), f"[beta{i}{j}*mu]"))
            c.rel(f"times-v.{i}{j}", lhs, rhs)
    return c


def assoc_empty(which):
    return Case(f"assoc-case{which}", ["q", "gf3", "gf5"],
                ["no identities; reduction argument, outside computational scope"])


# ---------------------------------------------------------------- alternative

def alt1(cid, mu_zero, with_u):
    c = Case(cid, ["gf2"])
    fam = "octonion_u_char2" if with_u else "octonion_char2"
    c.instance("", fam, params=[("mu", "0")] if mu_zero else [])
    al = [f"alpha{i}" for i in range(8)]
    be = [f"beta{i}" for i in range(8)] if with_u else []
    loc = ["z", "lam", "delta"] + ([] if mu_zero else ["nu"])
    c.symbols(al + be + loc)
    if not mu_zero:
        c.subst("nu", "mu*z")
    c.subst("lam", "beta*z")
    c.subst("delta", "gamma*z")
    c.nonzero(["z", "beta", "gamma"] + ([] if mu_zero else ["mu"]))
    terms = [(f"alpha{i}", f"e{i}") for i in range(8)]
    if with_u:
        terms += [(f"beta{i}", f"e{i}u") for i in range(8)]
    c.define("a", lin(terms))
    for i in range(8):
        c.define(f"f{i}", sc("z", f"e{i}"))

    def coef(i):
        return add(f"[alpha{i}]", sc(f"beta{i}", "e0u")) if with_u else f"[alpha{i}]"

    for i in range(8):
        c.define(f"c{i}", coef(i))
    c.define("Y", sub(mul("a", "[z]"), circ("a", "f1")))
    if not mu_zero:
        c.define("X", mul("Y", sub("f1", "[z]")))
        unit_part = sc("z", "c0")
        c.define("Xe", mul(sub(mul("a", "[z]"), circ("a", "f1"), unit_part), sub("f1", "[z]")))
        note = "subtract the unit component z*c0 from az - a o f1"
        c.rel("1", sc("nu*z", "c1"), "X")
        c.emend("1", sc("nu*z", "c1"), "Xe", note)
        for i, fi, s in [(2, 3, "z*nu*lam"), (3, 2, "z*nu*lam"), (4, 5, "z*nu*delta"), (5, 4, "z*nu*delta"),
                         (6, 7, "nu*lam*delta"), (7, 6, "nu*lam*delta")]:
            c.rel(str(i), sc(s, f"c{i}"), sub(sc("nu*z", circ("a", f"f{fi}")), mul("X", f"f{fi}")))
            c.emend(str(i), sc(s, f"c{i}"), sub(sc("nu*z", circ("a", f"f{fi}")), mul("Xe", f"f{fi}")), note)
    else:
        c.rel("0", sc("lam*delta^2*z^2", "c0"), mul(circ(mul(sub("f4", "f5"), "Y", "f4"), "f6"), "f6"))
        inner = sub(sc("lam*delta^2*z^2", "a"), sc("lam*delta^2*z", circ("a", "f1")), sc("lam*delta^2*z^2", "c0"))
        c.define("W", inner)
        c.rel("1", sc("lam^2*delta^4*z", "c1"), mul(circ("W", "f6"), "f6"))
        c.emend("1", sc("lam^2*delta^3*z^2", "c1"), mul(circ("W", "f6"), "f6"),
                "left scalar lam^2 delta^4 z read as lam^2 delta^3 z^2")
        for i, fi, ls, k in [(2, 3, "lam^3*delta^4*z", "lam^2*delta^4*z"), (3, 2, "lam^3*delta^4*z", "lam^2*delta^2*z"),
                             (4, 5, "lam^2*delta^5*z", "lam^2*delta^4*z"), (5, 4, "lam^2*delta^5*z", "lam^2*delta^4*z"),
                             (6, 7, "lam^3*delta^5", "lam^2*delta^4*z"), (7, 6, "lam^3*delta^5", "lam^2*delta^4*z")]:
            printed_coef = f"[alpha{i}]"
            rhs = sub(sc(k, circ("a", f"f{fi}")), sc("lam^2*delta^4*z", mul("c1", f"f{fi}")))
            c.rel(str(i), sc(ls, printed_coef), rhs)
            fixes = []
            lhs_e = sc(ls, printed_coef)
            rhs_e = rhs
            if with_u:
                lhs_e = sc(ls, f"c{i}")
                fixes.append(f"alpha{i} read as alpha{i} + beta{i} u")
            if i == 3:
                rhs_e = sub(sc("lam^2*delta^4*z", circ("a", f"f{fi}")), sc("lam^2*delta^4*z", mul("c1", f"f{fi}")))
                fixes.append("lam^2 delta^2 z read as lam^2 delta^4 z")
            if fixes:
                c.emend(str(i), lhs_e, rhs_e, "; ".join(fixes))
            if with_u:
                c.member(f"{i}.central", rhs_e, ["e0", "e0u"])
    return c


def alt3():
    c = Case("alt-3", ["gf3"])
    c.instance("", "b12")
    c.symbols(["alpha", "beta", "gamma", "z"])
    c.nonzero(["z"])
    c.define("a", lin([("alpha", "x"), ("beta", "y"), ("gamma", "1")]))
    c.define("x0", sc("z", "x"))
    c.define("y0", sc("z", "y"))
    c.rel("1", mul("a", "y0", "y0", "x0"), "[-z^3*alpha]")
    c.rel("2", mul("a", "x0", "x0", "y0"), "[-z^3*beta]")
    c.rel("3", mul("a", "y0", "x0", "x0", "y0"), "[-z^4*gamma]")
    return c


def alt4():
    c = Case("alt-4", ["gf3"])
    c.instance("", "b42")
    ij = ["11", "12", "21", "22"]
    c.symbols([f"alpha{x}" for x in ij] + ["beta1", "beta2", "z"])
    c.nonzero(["z"])
    c.define("a", lin([(f"alpha{x}", f"e{x}") for x in ij] + [("beta1", "m1"), ("beta2", "m2")]))
    for x in ij:
        c.define(f"f{x}", sc("z", f"e{x}"))
    c.define("n1", sc("z", "m1"))
    c.define("n2", sc("z", "m2"))
    c.define("an1", mul("a", "n1", "n1"))
    c.define("an2", mul("a", "n2", "n2"))
    c.rel("a11", add(mul(mul("f12", mul("an1", "f12")), "f21"), sc("z^2", mul("an1", "f12"))), "[-z^5*alpha11]")
    c.rel("a12", add(mul("f12", mul("an1", "f21")), mul("an1", "f21", "f12")), "[-z^4*alpha12]")
    c.rel("a21", add(mul("f21", mul("an2", "f12")), mul("an2", "f12", "f21")), "[z^4*alpha21]")
    c.rel("a22", add(mul(mul("f21", mul("an2", "f21")), "f12"), sc("z^2", mul("an2", "f21"))), "[z^5*alpha22]")
    c.define("t1", mul(mul("f22", mul("f12", "a")), "n2"))
    c.define("t2", mul(mul("f11", mul("f21", "a")), "n1"))
    c.rel("b1", add(mul("t1", "f21"), mul("f21", "t1")), "[z^4*beta1]")
    c.rel("b2", add(mul("t2", "f12"), mul("f12", "t2")), "[-z^4*beta2]")
    return c


# ---------------------------------------------------------------- Jordan

def jordan_a():
    c = Case("jordan-a", ["q", "gf3", "gf5"],
             ["the +- in relations R2, R3 and R5 is + inside one diagonal block and - across blocks"])
    for n, m in [(1, 1), (2, 1)]:
        N = n + m
        rng = range(1, N + 1)
        c.instance(f"n={n} m={m}", "jordan_Mnm", sizes=[("n", n), ("m", m)])
        c.symbols([f"alpha{i}{j}" for i in rng for j in rng] + ["z"])
        c.nonzero(["z"])
        c.define("a", lin([(f"alpha{i}{j}", f"e{i}{j}") for i in rng for j in rng]))
        for i in rng:
            for j in rng:
                c.define(f"f{i}{j}", sc("z", f"e{i}{j}"))

        def pm(i, k):
            same = (i <= n) == (k <= n)
            return add(f"e{i}{i}", f"e{k}{k}") if same else sub(f"e{i}{i}", f"e{k}{k}")

        for k in rng:
            f = f"f{k}{k}"
            c.rel(f"R1.k{k}", sub(sc("2", mul("a", f, f)), mul("a", f)), sc(f"z^2*alpha{k}{k}", f"e{k}{k}"))
            c.emend(f"R1.k{k}", sub(sc("2", mul("a", f, f)), sc("z", mul("a", f))),
                    sc(f"z^2*alpha{k}{k}", f"e{k}{k}"), "second term a o f_kk scaled by z")
        for k in rng:
            for i in rng:
                if i != k:
                    c.rel(f"R2.k{k}.i{i}", sc(f"z^2*alpha{k}{k}", mul(f"e{k}{k}", f"f{i}{k}", f"f{k}{i}")),
                          sc(f"1/4*z^4*alpha{k}{k}", pm(i, k)))
        for l in rng:
            for k in rng:
                if l == k:
                    continue
                chain = mul("a", f"f{k}{k}", f"f{l}{l}", f"f{k}{l}")
                c.rel(f"R3.l{l}.k{k}", sc(f"1/8*alpha{l}{k}", pm(l, k)), chain)
                c.emend(f"R3.l{l}.k{k}", sc(f"1/8*z^3*alpha{l}{k}", pm(l, k)), chain, "left side scaled by z^3")
                chain4 = mul("a", f"f{k}{k}", f"f{l}{l}", f"f{k}{l}", f"f{l}{l}")
                c.rel(f"R4.l{l}.k{k}", sc(f"z^4*alpha{l}{k}", f"e{l}{l}"), sc("16", chain4))
                c.emend(f"R4.l{l}.k{k}", sc(f"z^4*alpha{l}{k}", f"e{l}{l}"), sc("8", chain4), "coefficient 16 read as 8")
                for i in rng:
                    if i != l:
                        c.rel(f"R5.l{l}.k{k}.i{i}", sc(f"z^6*alpha{l}{k}", pm(i, l)),
                              sc(f"4*z^4*alpha{l}{k}", mul(f"e{l}{l}", f"f{i}{l}", f"f{l}{i}")))
    return c


def jordan_b():
    c = Case("jordan-b", ["q", "gf3", "gf5"], ["run at n = 2, where the (n-2) term vanishes, and at n = 3"])
    for n in (2, 3):
        rng = range(1, n + 1)
        c.instance(f"n={n}", "jordan_Qn", sizes=[("n", n)])
        c.symbols(["beta", "z"])
        c.nonzero(["z"])
        for i in rng:
            for j in rng:
                c.define(f"f{i}{j}", sc("z", f"e{i}{j}"))
        c.define("fb21", sc("z", "eb21"))
        c.define("onebar", add(*[f"eb{i}{i}" for i in rng]))
        c.define("X", sc("z^6*beta", "onebar"))
        c.define("base", mul("X", "f12", "fb21", "f11"))
        terms = [sc(f"-2*({n}-2)*z^2", "base")] + [sc("8", mul("base", f"f1{k}", f"f{k}1")) for k in range(2, n + 1)]
        c.rel("z11beta", "[z^11*beta]", add(*terms))
    return c


def jordan_c():
    c = Case("jordan-c", ["q", "gf3", "gf5"],
             ["extraction of z beta_kj chosen at n = 2: multiply by the odd diagonal, keep the even part, "
              "then walk to the unit with f products"])
    c.instance("n=2", "jordan_Pn", sizes=[("n", 2)])
    c.symbols(["alpha11", "alpha12", "alpha21", "alpha22", "beta11", "beta12", "beta22", "gamma12", "z"])
    c.nonzero(["z"])
    c.define("a", lin([(f"alpha{i}{j}", f"e{i}{j}") for i in (1, 2) for j in (1, 2)] +
                      [("beta11", "h11"), ("beta12", "h12"), ("beta22", "h22"), ("gamma12", "s12")]))
    for i in (1, 2):
        for j in (1, 2):
            c.define(f"f{i}{j}", sc("z", f"e{i}{j}"))
    c.define("H", add(sc("z", "h11"), sc("z", "h22")))
    c.define("W", sc("2", "(even " + mul("a", "H") + ")"))
    c.rel("C1", sc("z*gamma12", sub("e12", "e21")), "W")
    c.define("T", sc("8", mul("W", "f22", "f11", "f21", "f11")))
    c.rel("C2", "[z^7*gamma12]", sc("4", mul("T", "f21", "f12")))
    c.define("W3", sc("2", "(even " + mul("a", sc("z", "s12")) + ")"))
    c.define("T22", sc("8", mul("W3", "f22", "f11", "f21", "f11")))
    c.rel("C3.beta22", "[z^7*beta22]", sc("-4", mul("T22", "f21", "f12")))
    c.define("T11", sc("8", mul("W3", "f11", "f22", "f12", "f22")))
    c.rel("C3.beta11", "[z^7*beta11]", sc("4", mul("T11", "f12", "f21")))
    c.define("R", sub(sc("2", mul("W3", "f11", "f11")), sc("z", mul("W3", "f11"))))
    c.rel("C3.beta12", "[z^7*beta12]", sc("-4*z^2", mul("R", "f21", "f12")))
    return c


OSP_NAMES = {
    (1, 1): ["a11", "c11", "b11", "d11"],
    (2, 2): ["a11", "a12", "a22", "c11", "c12", "c21", "c22", "p12", "q12",
             "b11", "d11", "b12", "d12", "b21", "d21", "b22", "d22"],
}


def jordan_d():
    c = Case("jordan-d", ["q", "gf3", "gf5"],
             ["the extraction step needs n, m >= 2, so it runs only in the second instance"])
    for n, m in [(1, 1), (2, 2)]:
        names = OSP_NAMES[(n, m)]
        c.instance(f"n={n} m={m}", "jordan_osp", sizes=[("n", n), ("m", m)])
        c.symbols([f"x_{b}" for b in names])
        c.define("x", lin([(f"x_{b}", b) for b in names]))
        c.define("S", add(*[f"a{i}{i}" for i in range(1, n + 1)]) if n > 1 else "a11")
        c.define("Ablk", lin([(f"x_{b}", b) for b in names if b.startswith("a")]))
        c.define("Cblk", lin([(f"x_{b}", b) for b in names if b[0] in "cpq"]))
        c.define("W", sub(sc("2", mul("x", "S")), "x"))
        c.rel("D1", "Ablk", mul("W", "S"))
        c.rel("D2", "Cblk", mul("W", sub("[1]", "S")))
        c.emend("D2", "Cblk", mul(sub("x", sc("2", mul("x", "S"))), sub("[1]", "S")), "sign of the first factor")
        if n >= 2 and m >= 2:
            c.define("Xd", mul(sub(mul("x", "S"), "x"), "S"))
            for i in (1, 2):
                for j in (1, 2):
                    r, k = 3 - i, 3 - j
                    tgt = sc(f"x_d{i}{j}", f"p{k}{j}") if k < j else sc(f"-x_d{i}{j}", f"p{j}{k}")
                    c.rel(f"D3.i{i}.j{j}", tgt, sc("2", mul("Xd", f"a{i}{i}", f"c{j}{j}", f"c{r}{j}", f"d{r}{k}")))
                    c.emend(f"D3.i{i}.j{j}", tgt, sc("64", mul("Xd", f"a{i}{i}", f"c{j}{j}", f"c{k}{j}", f"d{i}{j}")),
                            "factors c_kj, d_ij and coefficient 64")
    return c


def jordan_e():
    c = Case("jordan-e", ["q", "gf3", "gf5"], ["t = u/z"])
    c.instance("", "jordan_Dt")
    c.symbols(["alpha1", "alpha2", "beta1", "beta2", "z", "u"])
    c.subst("u", "t*z")
    c.nonzero(["z", "t"])
    c.define("a", lin([("alpha1", "e1"), ("alpha2", "e2"), ("beta1", "x"), ("beta2", "y")]))
    c.define("f1", sc("z", "e1"))
    c.define("f2", sc("z", "e2"))
    c.define("v", sc("z", "x"))
    c.define("w", sc("z", "y"))
    c.define("T", add(sc("u", "f1"), sc("z", "f2")))
    c.rel("b1", "[u*z^4*beta1]", sc("4", mul("a", "f1", "f2", "w", "T")))
    c.rel("b2", "[u*z^4*beta2]", sc("-4", mul("a", "f1", "f2", "v", "T")))
    for i in (1, 2):
        chain = mul("a", f"f{i}", "v", "f1", "f2", "w", "T")
        c.rel(f"a{i}", f"[u*z^6*alpha{i}]", sc("4", chain))
        c.emend(f"a{i}", f"[u*z^6*alpha{i}]", sc("8", chain), "coefficient 4 read as 8")
    return c


def jordan_f():
    c = Case("jordan-f", ["q", "gf3", "gf5"])
    c.instance("n=2 m=1", "jordan_superform", sizes=[("n", 2), ("m", 1)])
    c.symbols(["gamma", "delta1", "delta2", "eps1", "eps2", "z", "lam1", "lam2", "mu1"])
    c.subst("lam1", "alpha1*z")
    c.subst("lam2", "alpha2*z")
    c.subst("mu1", "beta1*z")
    c.nonzero(["z", "alpha1", "alpha2", "beta1"])
    c.define("a", lin([("gamma", "e"), ("delta1", "e1"), ("delta2", "e2"), ("eps1", "g1"), ("eps2", "g2")]))
    c.define("f1", sc("z", "e1"))
    c.define("f2", sc("z", "e2"))
    c.define("h1", sc("z", "g1"))
    c.define("h2", sc("z", "g2"))
    c.rel("gamma", "[z^2*lam1*lam2*gamma]", mul("a", "f1", "f1", "f2", "f2"))
    c.rel("delta2", "[z*lam1*lam2*delta2]", mul("a", "f2", "f1", "f1"))
    c.rel("delta1", "[z*lam1*lam2*delta1]", mul("a", "f1", "f2", "f2"))
    c.rel("eps1", mul("a", "h2", "h2", "h1"), "[-z*mu1^2*eps1]")
    c.rel("eps2", mul("a", "h1", "h1", "h2"), "[-z*mu1^2*eps2]")
    return c


def jordan_g():
    c = Case("jordan-g", ["gf3"])
    c.instance("", "jordan_JP3")
    diag = ["11", "22", "33", "12", "13", "23"]
    pairs = ["12", "13", "23"]
    c.symbols([f"alpha{x}" for x in diag] + [f"beta{x}" for x in pairs] + [f"gamma{x}" for x in pairs] + ["z"])
    c.nonzero(["z"])
    c.define("a", lin([(f"alpha{x}", f"e{x}") for x in diag] + [(f"beta{x}", f"sb{x}") for x in pairs] +
                      [(f"gamma{x}", f"sbb{x}") for x in pairs]))
    for x in diag:
        c.define(f"f{x}", sc("z", f"e{x}"))
    for x in pairs:
        c.define(f"fb{x}", sc("z", f"sb{x}"))
        c.define(f"fbb{x}", sc("z", f"sbb{x}"))
    c.define("F1", mul("a", "fbb12", "fbb12", "fb12", "f11", "f33"))
    c.define("F2", mul("a", "fbb12", "fbb12", "fb12", "f22", "f33"))
    c.define("F3", mul("a", "fbb13", "fbb13", "fb13", "f33", "f22"))
    c.define("G1", mul("a", "fb12", "fb12", "fbb12", "f11", "f33"))
    c.define("G2", mul("a", "fb12", "fb12", "fbb12", "f22", "f33"))
    c.define("G3", mul("a", "fb13", "fb13", "fbb13", "f33", "f22"))
    for lab, X, p, q, r in [("beta23", "F1", "13", "23", "12"), ("beta13", "F2", "23", "13", "12"),
                            ("beta12", "F3", "23", "12", "13"), ("gamma23", "G1", "13", "23", "12"),
                            ("gamma13", "G2", "23", "13", "12"), ("gamma12", "G3", "23", "12", "13")]:
        rhs = add(sc("16*z", mul(X, f"f{p}")), sc("32", mul(X, f"f{q}", f"f{r}")), sc("32", mul(X, f"f{r}", f"f{q}")))
        c.rel(lab, f"[z^7*{lab}]", rhs)
    for ii, jj, pp, qq, rr, lab in [("11", "22", "12", "13", "23", "alpha12"), ("11", "33", "13", "12", "23", "alpha13"),
                                    ("22", "33", "23", "12", "13", "alpha23")]:
        Y = mul("a", f"f{ii}", f"f{jj}")
        rhs = add(sc("2*z", mul(Y, f"f{pp}")), sc("4", mul(Y, f"f{qq}", f"f{rr}")), sc("4", mul(Y, f"f{rr}", f"f{qq}")))
        c.rel(lab, f"[z^4*{lab}]", rhs)
    for kk, p, q, lab in [("11", "12", "13", "alpha11"), ("22", "12", "23", "alpha22"), ("33", "23", "13", "alpha33")]:
        W = sub(sc("2", mul("a", f"f{kk}")), sc("z", "a"))
        c.define(f"W{kk}", W)
        rhs = sub(add(sc("2", mul(f"W{kk}", f"f{kk}", f"f{p}", f"f{p}")), sc("2", mul(f"W{kk}", f"f{kk}", f"f{q}", f"f{q}"))),
                  sc("z^2", mul(f"W{kk}", f"f{kk}")))
        c.rel(lab, f"[z^4*{lab}]", rhs)
    return c


def jordan_h():
    c = Case("jordan-h", ["gf3"], ["b[ij] is the copy of b in the (i,j) slot"])
    c.instance("", "jordan_H3B42")
    Bn = ["e11", "e12", "e21", "e22", "m1", "m2"]
    gen = {"12": ["alpha11", "alpha12", "alpha21", "alpha22", "delta1", "delta2"],
           "13": ["beta11", "beta12", "beta21", "beta22", "eps1", "eps2"],
           "23": ["gamma11", "gamma12", "gamma21", "gamma22", "mu1", "mu2"]}
    terms = [(f"alpha{i}", f"1[{i}{i}]") for i in (1, 2, 3)]
    for ij, syms in gen.items():
        terms += [(s, f"{b}[{ij}]") for s, b in zip(syms, Bn)]
    c.symbols([s for s, _ in terms])
    c.define("a", lin(terms))
    for i in (1, 2, 3):
        c.define(f"E{i}{i}", f"1[{i}{i}]")
    for ij in gen:
        c.define(f"E{ij}", add(f"e11[{ij}]", f"e22[{ij}]"))
    for k, p, q, lab in [("11", "12", "13", "alpha1"), ("22", "12", "23", "alpha2"), ("33", "23", "13", "alpha3")]:
        c.define(f"W{k}", sub(sc("2", mul("a", f"E{k}")), "a"))
        rhs = sub(add(sc("4", mul(f"W{k}", f"E{k}", f"E{p}", f"E{p}")), sc("4", mul(f"W{k}", f"E{k}", f"E{q}", f"E{q}"))),
                  mul(f"W{k}", f"E{k}"))
        c.rel(lab, f"[{lab}]", rhs)
    offs = [("11", "22", "m2", "12", "13", "11", "delta1", 1), ("11", "22", "m1", "12", "13", "11", "delta2", 1),
            ("11", "33", "m2", "13", "12", "11", "eps1", 1), ("11", "33", "m1", "13", "12", "11", "eps2", 1),
            ("22", "33", "m2", "23", "12", "22", "mu1", 1), ("22", "33", "m1", "23", "12", "22", "mu2", 1),
            ("11", "22", "e12", "12", "13", "11", "alpha21", -1), ("11", "22", "e21", "12", "13", "11", "alpha12", -1),
            ("11", "33", "e12", "13", "12", "11", "beta21", -1), ("11", "33", "e21", "13", "12", "11", "beta12", -1),
            ("22", "33", "e12", "23", "12", "22", "gamma21", -1), ("22", "33", "e21", "23", "12", "22", "gamma12", -1),
            ("11", "22", "e22", "12", "13", "11", "alpha11", 1), ("11", "22", "e11", "12", "13", "11", "alpha22", 1),
            ("11", "33", "e22", "13", "12", "11", "beta11", 1), ("11", "33", "e11", "13", "12", "11", "beta22", 1),
            ("22", "33", "e22", "23", "12", "22", "gamma11", 1), ("22", "33", "e11", "23", "12", "22", "gamma22", 1)]
    for d1, d2, b, ij, f2, last, sym, sign in offs:
        X = mul("a", f"E{d1}", f"E{d2}", f"{b}[{ij}]")
        rhs = add(sc("32", mul(X, f"E{f2}", f"E{f2}")), sc("8", X), sc("-8", mul(X, f"E{last}")))
        c.rel(f"{sym}.{b}[{ij}]", f"[{sym}]" if sign > 0 else sub(f"[{sym}]"), rhs)
    return c


def all_cases():
    return [assoc_case2(), assoc_empty(3), assoc_empty(4),
            alt1("alt-1a", False, False), alt1("alt-1b", True, False), alt3(), alt4(),
            alt1("alt-5a", False, True), alt1("alt-5b", True, True),
            jordan_a(), jordan_b(), jordan_c(), jordan_d(), jordan_e(), jordan_f(), jordan_g(), jordan_h()]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "data" / "proofs"))
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for c in all_cases():
        (out / f"{c.cid}.proof").write_text(c.text())


if __name__ == "__main__":
    main()
