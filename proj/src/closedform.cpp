#include "trimult/closedform.hpp"

namespace trimult {

BigRat particular_constant(const MultiplierParams& p, SequenceKind kind) {
    if (!is_value_kind(kind)) return make_rational(-1, 2);
    BigRat tau = make_rational(-(triangular(p.kappa) - p.gamma), 4 * p.kappa * (p.kappa + 2));
    if (kind == SequenceKind::XiValue) {
        tau *= BigRat(p.k);
        tau.canonicalize();
    }
    return tau;
}

bool particular_identity_holds(const MultiplierParams& p, SequenceKind kind) {
    RecurrenceSpec spec = build_spec(p, kind);
    BigRat tau = particular_constant(p, kind);
    BigRat lhs = BigRat(spec.multiplier) * tau - tau + BigRat(spec.constant);
    return lhs == tau;
}

std::vector<ResidueForm> build_residue_forms(const MultiplierParams& p, SequenceKind kind) {
    const int r = p.rank;
    RecurrenceSpec spec = build_spec(p, kind);  // supplies the 2r-term window
    QuadElem unit = is_value_kind(kind) ? p.theta * p.theta : p.theta;
    if (unit.q == 0)
        throw std::domain_error("build_residue_forms: degenerate unit (rational theta)");
    const BigRat tau = particular_constant(p, kind);
    const BigRat g = unit.p;
    const BigRat hd = unit.q * BigRat(p.d);  // h * D

    std::vector<ResidueForm> forms;
    forms.reserve(static_cast<std::size_t>(r));
    for (int s = 0; s < r; ++s) {
        // anchors y_0 = x_s, y_1 = x_{s+r}:
        //   a + conj(a)         = x_s - tau
        //   a * u + conj(a * u) = x_{s+r} - tau
        BigRat ap = (BigRat(spec.window[s]) - tau) / 2;
        BigRat aq = ((BigRat(spec.window[s + r]) - tau) / 2 - ap * g) / hd;
        ResidueForm f;
        f.kind = kind;
        f.residue = s;
        f.a = QuadElem(ap, aq, p.d);
        f.unit = unit;
        f.particular = tau;
        forms.push_back(std::move(f));
    }
    return forms;
}

BigInt eval_at(const std::vector<ResidueForm>& forms, std::uint64_t n) {
    if (forms.empty()) throw std::invalid_argument("eval_at: no residue forms");
    const std::uint64_t r = forms.size();
    const ResidueForm& f = forms[static_cast<std::size_t>(n % r)];
    QuadElem z = f.a * f.unit.pow(n / r);
    QuadElem sum = z + z.conj();
    if (sum.q != 0) throw std::logic_error("eval_at: irrational part did not cancel");
    BigRat value = sum.p + f.particular;
    if (value.get_den() != 1) throw std::logic_error("eval_at: result is not a rational integer");
    return value.get_num();
}

TrigFormConstants trig_form_constants(const MultiplierParams& p, mpfr_prec_t precision) {
    const int r = p.rank;
    if (r < 1 || r > 4)
        throw std::domain_error("trig_form_constants: closed-form constants cover ranks 1..4 only");

    TrigFormConstants out;
    out.rank = r;
    const BigFloat al = p.theta.to_bigfloat(precision).root(static_cast<unsigned long>(r));
    const BigFloat be = p.theta.conj().to_bigfloat(precision).root(static_cast<unsigned long>(r));
    out.alpha = al;
    out.beta = be;

    const BigFloat one(1L, precision), two(2L, precision);
    auto seed = [&](int i) { return BigFloat(p.seeds[static_cast<std::size_t>(i)], precision); };
    auto put = [&](const char* name, const BigFloat& value) {
        out.constants.emplace_back(name, value);
    };

    if (r == 1) {
        const BigFloat den = two * (al - be);
        put("A", al * (one - be) / den);
        put("B", be * (al - one) / den);
    } else if (r == 2) {
        const BigFloat t1 = seed(1);
        const BigFloat a2 = al.pow(2), b2 = be.pow(2);
        const BigFloat den = BigFloat(4L, precision) * (a2 - b2);
        put("A", (al * (al + one) * (one - b2) + two * t1 * (al - one)) / den);
        put("A'", (al * (al - one) * (one - b2) - two * t1 * (al + one)) / den);
        put("B", (be * (be + one) * (a2 - one) - two * t1 * (be - one)) / den);
        put("B'", (be * (be - one) * (a2 - one) + two * t1 * (be + one)) / den);
    } else if (r == 3) {
        const BigFloat u = two * seed(1) + one, v = two * seed(2) + one;
        const BigFloat a2 = al.pow(2), a3 = al.pow(3), b2 = be.pow(2), b3 = be.pow(3);
        const BigFloat den = BigFloat(6L, precision) * (a3 - b3);
        const BigFloat sqrt3 = BigFloat(3L, precision).sqrt();
        put("A", (al * (a2 - b3) + u * a2 * (one - b3) + v * (al - one)) / den);
        // The A-prime numerator needs alpha*(2*alpha^2 + beta^3); dropping the
        // square on the leading term fails to reproduce the sequence.
        put("A'", (al * (two * a2 + b3) - u * a2 * (one - b3) - v * (al + two)) / den);
        put("A''", sqrt3 * al * (b3 + u * al * (one - b3) - v) / den);
        put("B", (be * (a3 - b2) + u * b2 * (a3 - one) - v * (be - one)) / den);
        put("B'", (-(be * (a3 + two * b2)) - u * b2 * (a3 - one) + v * (be + two)) / den);
        put("B''", sqrt3 * be * (-a3 + u * be * (a3 - one) + v) / den);
    } else {
        const BigFloat u = two * seed(1) + one, v = two * seed(2) + one, w = two * seed(3) + one;
        const BigFloat a2 = al.pow(2), a3 = al.pow(3), a4 = al.pow(4);
        const BigFloat b2 = be.pow(2), b3 = be.pow(3), b4 = be.pow(4);
        const BigFloat den8 = BigFloat(8L, precision) * (a4 - b4);
        const BigFloat den4 = BigFloat(4L, precision) * (a4 - b4);
        put("A",
            (al * (a3 - b4) + u * a2 * (al - b4) + v * a2 * (one - al * b4) + w * (al - one)) /
                den8);
        put("A'",
            (al * (a3 + b4) - u * a2 * (al + b4) + v * a2 * (one + al * b4) - w * (al + one)) /
                den8);
        put("A''", (a4 + u * a2 * b4 - v * a2 - w) / den4);
        put("A'''", al * (b4 + u * a2 - v * a2 * b4 - w) / den4);
        put("B",
            (be * (a4 - b3) + u * b2 * (a4 - be) + v * b2 * (a4 * be - one) - w * (be - one)) /
                den8);
        put("B'",
            (-(be * (a4 + b3)) + u * b2 * (a4 + be) - v * b2 * (a4 * be + one) + w * (be + one)) /
                den8);
        put("B''", (-b4 - u * a4 * b2 + v * b2 + w) / den4);
        put("B'''", be * (-a4 - u * b2 + v * a4 * b2 + w) / den4);
    }
    return out;
}

BigFloat reconstruct_via_trig(const TrigFormConstants& c, std::uint64_t n) {
    const mpfr_prec_t prec = c.alpha.precision();
    const BigFloat an = c.alpha.pow(static_cast<long>(n));
    const BigFloat bn = c.beta.pow(static_cast<long>(n));
    const BigFloat half = BigFloat(1L, prec) / BigFloat(2L, prec);
    const BigFloat sign((n % 2 == 0) ? 1L : -1L, prec);
    auto k = [&](std::size_t i) -> const BigFloat& { return c.constants[i].second; };

    switch (c.rank) {
        case 1:
            return k(0) * an + k(1) * bn - half;
        case 2:
            return (k(0) + sign * k(1)) * an + (k(2) + sign * k(3)) * bn - half;
        case 3: {
            BigFloat angle = BigFloat::pi(prec) * BigFloat(static_cast<long>(2 * (n % 3)), prec) /
                             BigFloat(3L, prec);
            BigFloat co = angle.cos(), si = angle.sin();
            return (k(0) + k(1) * co + k(2) * si) * an + (k(3) + k(4) * co + k(5) * si) * bn -
                   half;
        }
        case 4: {
            BigFloat angle = BigFloat::pi(prec) * BigFloat(static_cast<long>(n % 4), prec) /
                             BigFloat(2L, prec);
            BigFloat co = angle.cos(), si = angle.sin();
            return (k(0) + sign * k(1) + k(2) * co + k(3) * si) * an +
                   (k(4) + sign * k(5) + k(6) * co + k(7) * si) * bn - half;
        }
        default:
            throw std::domain_error("reconstruct_via_trig: unsupported rank");
    }
}

std::optional<BigInt> round_with_guard(const BigFloat& v, long guard_bits) {
    if (v.distance_to_nearest_int() < BigFloat::pow2(-guard_bits, v.precision()))
        return v.round_nearest();
    return std::nullopt;
}

namespace {

// Just enough complex arithmetic for the root check.
struct Cplx {
    BigFloat re, im;

    Cplx(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    friend Cplx operator*(const Cplx& a, const Cplx& b) {
        return Cplx(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    Cplx pow(int e, mpfr_prec_t prec) const {
        Cplx acc(BigFloat(1L, prec), BigFloat(0L, prec));
        for (int i = 0; i < e; ++i) acc = acc * *this;
        return acc;
    }
    BigFloat modulus() const { return (re * re + im * im).sqrt(); }
};

}  // namespace

RootCheckReport char_poly_root_check(const MultiplierParams& p, mpfr_prec_t precision) {
    const int r = p.rank;
    const BigFloat coeff(BigInt(2 * (p.kappa + 1)), precision);
    const BigFloat al = p.theta.to_bigfloat(precision).root(static_cast<unsigned long>(r));
    const BigFloat be = p.theta.conj().to_bigfloat(precision).root(static_cast<unsigned long>(r));
    const BigFloat one(1L, precision);

    RootCheckReport rep;
    rep.root_count = 2 * r;
    rep.max_residual = BigFloat(0L, precision);
    Cplx product(one, BigFloat(0L, precision));

    for (int j = 0; j < r; ++j) {
        BigFloat angle = BigFloat::pi(precision) * BigFloat(2L * j, precision) /
                         BigFloat(static_cast<long>(r), precision);
        Cplx phase(angle.cos(), angle.sin());
        for (const BigFloat& base : {al, be}) {
            Cplx z(base * phase.re, base * phase.im);
            Cplx zr = z.pow(r, precision);
            Cplx z2r = zr * zr;
            Cplx residual(z2r.re - coeff * zr.re + one, z2r.im - coeff * zr.im);
            BigFloat mod = residual.modulus();
            if (mod > rep.max_residual) rep.max_residual = mod;
            product = product * z;
        }
    }
    rep.product_error = Cplx(product.re - one, product.im).modulus();
    return rep;
}

nlohmann::json residue_forms_to_json(const std::vector<ResidueForm>& forms) {
    nlohmann::json arr = nlohmann::json::array();
    for (const ResidueForm& f : forms) {
        nlohmann::json j;
        j["kind"] = std::string(kind_name(f.kind));
        j["s"] = f.residue;
        j["a_p"] = to_fraction_string(f.a.p);
        j["a_q"] = to_fraction_string(f.a.q);
        j["D"] = to_decimal(f.a.d);
        j["unit_p"] = to_fraction_string(f.unit.p);
        j["unit_q"] = to_fraction_string(f.unit.q);
        j["particular_num"] = to_decimal(BigInt(f.particular.get_num()));
        j["particular_den"] = to_decimal(BigInt(f.particular.get_den()));
        arr.push_back(std::move(j));
    }
    return arr;
}

std::vector<ResidueForm> residue_forms_from_json(const nlohmann::json& j) {
    std::vector<ResidueForm> forms;
    for (const auto& e : j) {
        ResidueForm f;
        auto kind = parse_kind(e.at("kind").get<std::string>());
        if (!kind) throw std::invalid_argument("residue_forms_from_json: bad kind");
        f.kind = *kind;
        f.residue = e.at("s").get<int>();
        BigInt d = parse_decimal(e.at("D").get<std::string>());
        f.a = QuadElem(parse_fraction(e.at("a_p").get<std::string>()),
                       parse_fraction(e.at("a_q").get<std::string>()), d);
        f.unit = QuadElem(parse_fraction(e.at("unit_p").get<std::string>()),
                          parse_fraction(e.at("unit_q").get<std::string>()), d);
        f.particular = make_rational(parse_decimal(e.at("particular_num").get<std::string>()),
                                     parse_decimal(e.at("particular_den").get<std::string>()));
        forms.push_back(std::move(f));
    }
    return forms;
}

}  // namespace trimult
