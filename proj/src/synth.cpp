#include "mqmine/synth.hpp"

#include <algorithm>
#include <cstdio>

#include "mqmine/decimal.hpp"
#include "mqmine/error.hpp"
#include "mqmine/mpe.hpp"

namespace mqmine {

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

std::uint64_t Rng::next() { return engine_(); }

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw RangeError("Rng::below(0)");
    // Rejection sampling keeps the draw exactly uniform.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n + 1) % n;
    std::uint64_t x;
    do {
        x = next();
    } while (x > limit);
    return x % n;
}

long long Rng::between(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

bool Rng::chance(double p) { return uniform() < p; }

namespace {

struct Replacement {
    std::string_view from;
    std::vector<std::string_view> to;
};

std::string replace_all(std::string_view text, const std::vector<Replacement>& table, Rng& rng) {
    std::string out;
    out.reserve(text.size() + 16);
    for (std::size_t i = 0; i < text.size();) {
        bool hit = false;
        for (const auto& r : table) {
            if (text.compare(i, r.from.size(), r.from) == 0) {
                out += r.to[r.to.size() == 1 ? 0 : rng.below(r.to.size())];
                i += r.from.size();
                hit = true;
                break;
            }
        }
        if (!hit) out.push_back(text[i++]);
    }
    return out;
}

}  // namespace

const std::vector<std::string>& corruption_transforms() {
    static const std::vector<std::string> ids = {"caret_loss", "en_dash", "plusminus", "micro", "mojibake"};
    return ids;
}

std::string apply_transform(std::string_view id, std::string_view text, Rng& rng) {
    if (id == "caret_loss") {
        std::string out;
        for (char c : text)
            if (c != '^') out.push_back(c);
        return out;
    }
    if (id == "en_dash") return replace_all(text, {{"-", {"–", "—", "−"}}}, rng);
    if (id == "plusminus") return replace_all(text, {{"±", {"Â±", "+/-", "+-"}}}, rng);
    if (id == "micro") return replace_all(text, {{"µ", {"Âµ", "Î¼", "μ"}}}, rng);
    if (id == "mojibake") {
        // cp1252 renderings of UTF-8 bytes, plus the truncated dash form.
        static const std::vector<Replacement> table = {
            {"×", {"Ã—"}},   {"°", {"Â°"}},   {"·", {"Â·"}},   {"–", {"â€“", "â€"}},
            {"—", {"â€”"}},  {"−", {"âˆ’"}},  {"≈", {"â‰ˆ"}},  {"≅", {"â‰…"}},
            {"±", {"Â±"}},   {"µ", {"Âµ"}},
        };
        return replace_all(text, table, rng);
    }
    throw Error("unknown corruption transform '" + std::string(id) + "'");
}

namespace {

std::string fixed(long long digits, int scale) {
    std::string s = std::to_string(digits);
    if (scale <= 0) return s;
    if (static_cast<int>(s.size()) <= scale) s.insert(0, static_cast<std::size_t>(scale) - s.size() + 1, '0');
    s.insert(s.size() - static_cast<std::size_t>(scale), ".");
    return s;
}

std::string group(long long v, char sep) {
    std::string s = std::to_string(v);
    for (int i = static_cast<int>(s.size()) - 3; i > 0; i -= 3) s.insert(static_cast<std::size_t>(i), 1, sep);
    return s;
}

std::string value_of(std::string_view plain, int exponent = 0) {
    auto d = Decimal::parse(plain);
    if (!d) throw Error("generator produced a bad number: " + std::string(plain));
    return d->shifted(exponent).to_string();
}

struct Quantity {
    std::string text;
    std::string value;
};

// Quantity literal forms from the extraction rules.
enum class Form { integer, decimal, comma, space, leading_point, signed_, error, sci_times, sci_e, sci_paren_error };

std::string exponent_text(int k) { return k < 0 ? "-" + std::to_string(-k) : std::to_string(k); }

Quantity make_quantity(Rng& rng, Form form) {
    switch (form) {
    case Form::integer: {
        auto v = rng.between(1, 999);
        return {std::to_string(v), std::to_string(v)};
    }
    case Form::decimal: {
        int scale = static_cast<int>(rng.between(1, 3));
        auto s = fixed(rng.between(1, 99999), scale);
        return {s, value_of(s)};
    }
    case Form::comma: {
        auto v = rng.between(1000, 999999);
        return {group(v, ','), std::to_string(v)};
    }
    case Form::space: {
        auto v = rng.between(1000, 999999);
        return {group(v, ' '), std::to_string(v)};
    }
    case Form::leading_point: {
        int scale = static_cast<int>(rng.between(2, 3));
        auto digits = rng.between(1, scale == 2 ? 99 : 999);
        auto s = fixed(digits, scale);
        s.erase(0, 1);  // "0.75" -> ".75"
        return {s, value_of(s)};
    }
    case Form::signed_: {
        const bool neg = rng.chance(0.7);
        auto s = fixed(rng.between(1, 9999), static_cast<int>(rng.between(0, 2)));
        return {(neg ? "-" : "+") + s, value_of((neg ? "-" : "") + s)};
    }
    case Form::error: {
        auto m = fixed(rng.between(10000, 99999), 4);
        auto e = fixed(rng.between(1, 99), 3);
        const char* pm = rng.chance(0.5) ? " ± " : "±";
        return {m + pm + e, value_of(m)};
    }
    case Form::sci_times: {
        auto m = fixed(rng.between(11, 99), 1);
        int k = static_cast<int>(rng.between(-12, 12));
        if (k == 0 || k == 1) k = -3;
        static const std::vector<std::string_view> times = {" × ", "×", " x ", " · "};
        std::string t = std::string(times[rng.below(times.size())]);
        return {m + t + "10^" + exponent_text(k), value_of(m, k)};
    }
    case Form::sci_e: {
        auto m = fixed(rng.between(11, 99), 1);
        int k = static_cast<int>(rng.between(-9, 9));
        if (k == 0) k = 4;
        const char e = rng.chance(0.5) ? 'e' : 'E';
        std::string ks = exponent_text(k);
        if (k > 0 && rng.chance(0.5)) ks = "+" + ks;
        return {m + e + ks, value_of(m, k)};
    }
    case Form::sci_paren_error: {
        auto m = fixed(rng.between(10000, 99999), 4);
        auto e = fixed(rng.between(1, 9), 3);
        int k = static_cast<int>(rng.between(-9, -2));
        return {"(" + m + " ± " + e + ") × 10^" + exponent_text(k), value_of(m, k)};
    }
    }
    return {};
}

Form random_form(Rng& rng) {
    static const std::vector<std::pair<Form, int>> weights = {
        {Form::integer, 20}, {Form::decimal, 25},      {Form::comma, 8},        {Form::space, 4},
        {Form::leading_point, 6}, {Form::signed_, 5}, {Form::error, 8},         {Form::sci_times, 10},
        {Form::sci_e, 8},    {Form::sci_paren_error, 6},
    };
    int total = 0;
    for (const auto& w : weights) total += w.second;
    auto r = static_cast<int>(rng.below(static_cast<std::uint64_t>(total)));
    for (const auto& [f, w] : weights) {
        if (r < w) return f;
        r -= w;
    }
    return Form::integer;
}

struct UnitForm {
    std::string_view surface;
    std::string_view key;
};

struct PropertySpec {
    std::string_view text;
    std::vector<UnitForm> units;
};

const std::vector<PropertySpec>& properties() {
    static const std::vector<PropertySpec> p = {
        {"pixel pitch", {{"µm", "um"}, {"mm", "mm"}, {"nm", "nm"}}},
        {"panel strength", {{"ksi", "ksi"}, {"MPa", "MPa"}, {"GPa", "GPa"}}},
        {"tensile strength", {{"MPa", "MPa"}, {"GPa", "GPa"}, {"ksi", "ksi"}}},
        {"melting point", {{"°C", "degC"}, {"K", "K"}}},
        {"core temperature", {{"°C", "degC"}, {"K", "K"}, {"°F", "degF"}}},
        {"wavelength", {{"nm", "nm"}, {"µm", "um"}}},
        {"floor area", {{"m^2", "m^2"}, {"ft^2", "ft^2"}}},
        {"current density", {{"A/cm^2", "A.cm^-2"}, {"mA/cm^2", "mA.cm^-2"}}},
        {"electric field", {{"kV/cm", "kV.cm^-1"}, {"V/m", "V.m^-1"}}},
        {"scan frequency", {{"Hz", "Hz"}, {"kHz", "kHz"}}},
        {"resonance frequency", {{"kHz", "kHz"}, {"MHz", "MHz"}, {"GHz", "GHz"}}},
        {"average responsivity", {{"pA/K", "pA.K^-1"}, {"mA/W", "mA.W^-1"}}},
        {"laser power", {{"mW", "mW"}, {"W", "W"}, {"kW", "kW"}}},
        {"pulse duration", {{"ns", "ns"}, {"µs", "us"}, {"fs", "fs"}}},
        {"beam diameter", {{"mm", "mm"}, {"µm", "um"}}},
        {"film thickness", {{"nm", "nm"}, {"µm", "um"}}},
        {"chamber pressure", {{"kPa", "kPa"}, {"Torr", "Torr"}, {"mbar", "mbar"}}},
        {"flow rate", {{"mL/min", "mL.min^-1"}, {"L/min", "L.min^-1"}}},
        {"drift velocity", {{"m/s", "m.s^-1"}, {"cm/s", "cm.s^-1"}, {"m·s^-1", "m.s^-1"}}},
        {"cruise speed", {{"km/h", "km.h^-1"}, {"kilometers per hour", "km.h^-1"}}},
        {"sample mass", {{"mg", "mg"}, {"g", "g"}, {"kg", "kg"}}},
        {"serum concentration", {{"µg/mL", "ug.mL^-1"}, {"mg/L", "mg.L^-1"}}},
        {"electron energy", {{"eV", "eV"}, {"keV", "keV"}, {"MeV", "MeV"}}},
        {"noise level", {{"dB", "dB"}}},
        {"peak voltage", {{"V", "V"}, {"kV", "kV"}, {"mV", "mV"}}},
        {"grain size", {{"µm", "um"}, {"nm", "nm"}}},
        {"gravity curvature", {{"s^-2m^-1", "s^-2.m^-1"}, {"s^-2 m^-1", "s^-2.m^-1"}}},
        {"orbital distance", {{"km", "km"}, {"miles", "mi"}}},
        {"detection efficiency", {{"%", "%"}}},
        {"radiation dose", {{"Gy", "Gy"}, {"mSv", "mSv"}}},
    };
    return p;
}

// Head-of-modifier phrases for the "NP IN DT? NP" shape.
struct OfPhrase {
    std::string_view text;
    std::vector<UnitForm> units;
};

const std::vector<OfPhrase>& of_phrases() {
    static const std::vector<OfPhrase> p = {
        {"strength of panel", {{"ksi", "ksi"}, {"MPa", "MPa"}}},
        {"freq. of scans", {{"Hz", "Hz"}, {"kHz", "kHz"}}},
        {"frequency of longitudinal scan", {{"Hz", "Hz"}}},
        {"temperature of the chamber", {{"°C", "degC"}, {"K", "K"}}},
        {"thickness of the oxide layer", {{"nm", "nm"}}},
        {"diameter of the fiber core", {{"µm", "um"}}},
        {"pressure of the vessel", {{"kPa", "kPa"}, {"psi", "psi"}}},
        {"mass of the payload", {{"kg", "kg"}}},
        {"length of the cavity", {{"mm", "mm"}, {"cm", "cm"}}},
        {"width of the channel", {{"µm", "um"}}},
    };
    return p;
}

struct Piece {
    std::string text;
    int gold = -1;  // index into the sentence's gold list
};

struct Builder {
    std::vector<Piece> pieces;
    std::vector<GoldQuantity> gold;

    Builder& add(std::string_view t) {
        pieces.push_back({std::string(t), -1});
        return *this;
    }
    Builder& mq(const Quantity& q, const UnitForm& u, std::optional<std::string> property) {
        std::string sep = u.surface == "%" ? "" : " ";
        gold.push_back({q.value, std::string(u.key), {}, std::move(property)});
        pieces.push_back({q.text + sep + std::string(u.surface), static_cast<int>(gold.size()) - 1});
        return *this;
    }
};

std::string capitalize(std::string s) {
    if (!s.empty() && s[0] >= 'a' && s[0] <= 'z') s[0] = static_cast<char>(s[0] - 'a' + 'A');
    return s;
}

const std::vector<std::string_view>& lead_ins() {
    static const std::vector<std::string_view> v = {"", "", "", "In this study, ", "As expected, ",
                                                    "For the second series, ", "In all trials, "};
    return v;
}

const std::vector<std::string_view>& endings() {
    static const std::vector<std::string_view> v = {".", ".", ".", ", as expected.", " overall.",
                                                    ", which agrees with the model."};
    return v;
}

Quantity quantity_for(Rng& rng) { return make_quantity(rng, random_form(rng)); }

void property_sentence(Rng& rng, Builder& b, std::string& template_id) {
    const auto& props = properties();
    const auto& prop = props[rng.below(props.size())];
    const auto& unit = prop.units[rng.below(prop.units.size())];
    const std::string ptext(prop.text);
    const std::string det = rng.chance(0.5) ? "the " : "";
    const std::string lead(lead_ins()[rng.below(lead_ins().size())]);
    const std::string end(endings()[rng.below(endings().size())]);
    auto q = quantity_for(rng);

    switch (rng.below(10)) {
    case 0: {  // NP SYM{0,2} EQ MQ
        template_id = "P1";
        static const std::vector<std::string_view> eqs = {"=", "≈", "≅", "~", "ζ =", "λ ≈", "σ =", "Δ ρ ="};
        b.add(lead + det + ptext + " " + std::string(eqs[rng.below(eqs.size())]) + " ").mq(q, unit, ptext).add(end);
        break;
    }
    case 1: {  // MQ IN? NP
        template_id = "P2";
        static const std::vector<std::pair<std::string_view, std::string_view>> subs = {
            {"30% fuming sulfuric acid", "mL"}, {"penicillin", "mg"}, {"ethanol", "mL"},
            {"sodium chloride", "g"},           {"deionized water", "L"}, {"buffer solution", "µL"},
        };
        if (rng.chance(0.5)) {
            const auto& [sub, usym] = subs[rng.below(subs.size())];
            std::string key(usym == "µL" ? "uL" : usym);
            UnitForm uf{usym, key};
            static const std::vector<std::string_view> verbs = {"We added ", "The mixture contained ",
                                                                "Samples were treated with "};
            b.add(std::string(verbs[rng.below(verbs.size())]));
            if (sub == std::string_view("30% fuming sulfuric acid")) {
                // The percentage is a quantity of its own inside the substance phrase.
                const std::string pct = std::to_string(rng.between(5, 95));
                b.mq(q, uf, pct + "% fuming sulfuric acid").add(" of ");
                b.mq({pct, pct}, {"%", "%"}, std::nullopt).add(" fuming sulfuric acid" + end);
            } else {
                b.mq(q, uf, std::string(sub)).add(" of " + std::string(sub) + end);
            }
        } else {
            // A percentage in front of a noun is part of the noun phrase, so this form needs a real unit.
            const auto& u = unit.surface == "%" ? UnitForm{"mg", "mg"} : unit;
            const std::string what = unit.surface == "%" ? "sample mass" : ptext;
            b.add(capitalize(lead + "a ")).mq(q, u, what).add(" " + what + " was used" + end);
        }
        break;
    }
    case 2: {  // NP IN DT? NP VP+ (TO|IN|RB|JJ)* MQ
        template_id = "P3";
        const auto& of = of_phrases()[rng.below(of_phrases().size())];
        const auto& ou = of.units[rng.below(of.units.size())];
        auto oq = quantity_for(rng);
        static const std::vector<std::string_view> links = {" was set to ", " was roughly ", " was approximately ",
                                                            " was measured at ", " was held at "};
        b.add(lead + "the " + std::string(of.text) + std::string(links[rng.below(links.size())]))
            .mq(oq, ou, std::string(of.text))
            .add(end);
        break;
    }
    case 3:
    case 4: {  // NP (IN DT? NP)* VP+ (IN|TO|RB|JJ)* MQ
        template_id = "P4";
        static const std::vector<std::string_view> links = {
            " employed was ",   " was recorded at ", " was ",          " is ",           " was estimated at ",
            " was maintained at ", " reached ",       " was increased to ", " remained below ", " was kept at ",
            " is typically ",
        };
        b.add(lead + "the " + ptext + std::string(links[rng.below(links.size())])).mq(q, unit, ptext).add(end);
        break;
    }
    case 5:
    case 6: {  // NP (CC|IN|TO|RB|JJ)* '('? MQ ')'?
        template_id = "P5";
        static const std::vector<std::string_view> links = {
            " as high as roughly ", " of at least ", " at least ", " of about ", " of approximately ",
            " lower than ",         " greater than ", " of ",      " as low as ", " of about, or above ",
            " of nearly ",          " below ",        " above ",
        };
        const std::string np = rng.chance(0.5) ? "a " + ptext : ptext;
        b.add(lead.empty() ? "We observed " + np : lead + "we observed " + np);
        b.add(std::string(links[rng.below(links.size())])).mq(q, unit, ptext).add(end);
        break;
    }
    case 7: {  // NP '(' MQ ')'
        template_id = "P5";
        b.add(capitalize(lead + det + ptext + " (")).mq(q, unit, ptext).add(") was within tolerance" + end);
        break;
    }
    case 8: {  // two quantities joined by a connector
        template_id = "P5-conjunct";
        auto q2 = quantity_for(rng);
        static const std::vector<std::string_view> joins = {" to ", " and ", " or "};
        b.add(lead.empty() ? "We observed a " + ptext + " of " : lead + "we observed a " + ptext + " of ")
            .mq(q, unit, ptext)
            .add(std::string(joins[rng.below(joins.size())]))
            .mq(q2, unit, ptext)
            .add(end);
        break;
    }
    default: {  // parenthetical equivalent
        template_id = "P5-paren";
        const auto& alt = prop.units[(rng.below(prop.units.size()))];
        auto q2 = make_quantity(rng, Form::decimal);
        b.add(lead.empty() ? "We observed a " + ptext + " lower than " : lead + "we observed a " + ptext + " lower than ")
            .mq(q, unit, ptext)
            .add(" (")
            .mq(q2, alt, ptext)
            .add(")" + end);
        break;
    }
    }
}

void plain_quantity_sentence(Rng& rng, Builder& b, std::string& template_id) {
    template_id = "MQ";
    const auto& props = properties();
    const auto& prop = props[rng.below(props.size())];
    const auto& unit = prop.units[rng.below(prop.units.size())];
    auto q = quantity_for(rng);
    static const std::vector<std::pair<std::string_view, std::string_view>> frames = {
        {"After ", ", the samples were removed."},
        {"At ", ", the response changes sharply."},
        {"Within ", ", no further change was seen."},
    };
    const auto& [pre, post] = frames[rng.below(frames.size())];
    b.add(pre).mq(q, unit, std::nullopt).add(post);
}

void distractor_sentence(Rng& rng, Builder& b, std::string& template_id) {
    template_id = "distractor";
    auto n = [&](long long lo, long long hi) { return std::to_string(rng.between(lo, hi)); };
    switch (rng.below(7)) {
    case 0: b.add("The cohort included " + n(10, 400) + " patients and " + n(5, 90) + " controls."); break;
    case 1: b.add("Complete results are listed in Table " + n(1, 9) + " m of the appendix."); break;
    case 2: b.add("The scanned header read " + n(1, 9) + " AJmm for every page."); break;
    case 3: b.add("Specimen " + n(2, 40) + "-A was discarded after inspection."); break;
    case 4: b.add("Figure " + n(1, 12) + " A shows the layout of the experiment."); break;
    case 5: b.add("The program started in " + n(1995, 2012) + " with " + n(3, 12) + " partner sites."); break;
    default: b.add("Only " + n(2, 30) + " of the " + n(31, 90) + " reports were complete."); break;
    }
}

LabeledSentence finish(Builder& b, Rng& rng, double p, std::string template_id) {
    LabeledSentence s;
    s.template_id = std::move(template_id);
    std::vector<bool> active;
    for (const auto& id : corruption_transforms()) {
        const bool on = rng.chance(p);
        active.push_back(on);
        if (on) s.transform_ids.push_back(id);
    }
    for (auto& piece : b.pieces)
        for (std::size_t t = 0; t < active.size(); ++t)
            if (active[t]) piece.text = apply_transform(corruption_transforms()[t], piece.text, rng);
    for (const auto& piece : b.pieces) {
        if (piece.gold >= 0) b.gold[static_cast<std::size_t>(piece.gold)].span = {s.text.size(), s.text.size() + piece.text.size()};
        s.text += piece.text;
    }
    s.text = capitalize(std::move(s.text));
    s.gold_mqs = std::move(b.gold);
    for (const auto& g : s.gold_mqs) {
        if (g.property) {
            s.gold_property = normalize_property(*g.property);
            break;
        }
    }
    for (auto& g : s.gold_mqs)
        if (g.property) g.property = normalize_property(*g.property);
    return s;
}

}  // namespace

std::vector<LabeledSentence> synth_corpus(std::uint64_t seed, std::size_t n, double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw RangeError("corruption_prob must lie in [0, 1]");
    Rng rng(seed);
    std::vector<LabeledSentence> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Builder b;
        std::string template_id;
        const auto roll = rng.below(100);
        if (roll < 70)
            property_sentence(rng, b, template_id);
        else if (roll < 82)
            plain_quantity_sentence(rng, b, template_id);
        else
            distractor_sentence(rng, b, template_id);
        out.push_back(finish(b, rng, p, std::move(template_id)));
    }
    return out;
}

namespace {

struct Topic {
    std::string_view name;
    std::vector<std::string_view> fillers;
    // "{q}" marks the quantity; properties are stated by the template.
    std::vector<std::pair<std::string_view, std::vector<UnitForm>>> measurements;
};

const std::vector<Topic>& topics() {
    static const std::vector<Topic> t = {
        {"cancer",
         {"Prostate cancer remains a leading cause of death in men.",
          "Breast tumor biopsies were collected from each patient.",
          "Tumor response was assessed by the oncology team.",
          "Chemotherapy resistance in carcinoma cells is poorly understood.",
          "The cancer cohort was followed for recurrence."},
         {{"After treatment, the tumor volume reached {q}.", {{"mm^3", "mm^3"}, {"cm^3", "cm^3"}}},
          {"Each fraction delivered a radiation dose of {q}.", {{"Gy", "Gy"}}},
          {"In responders, the serum concentration of docetaxel was {q}.", {{"ng/mL", "ng.mL^-1"}, {"µg/mL", "ug.mL^-1"}}}}},
        {"materials",
         {"The alloy specimens were machined from rolled plate.",
          "Fatigue cracks initiated at surface defects.",
          "Composite panels were cured in an autoclave.",
          "Grain boundaries were imaged after etching."},
         {{"At room temperature, the tensile strength of the alloy was {q}.", {{"MPa", "MPa"}, {"ksi", "ksi"}}},
          {"The panel strength was recorded at {q}.", {{"ksi", "ksi"}, {"MPa", "MPa"}}},
          {"For all coupons, the annealing temperature was {q}.", {{"°C", "degC"}, {"K", "K"}}}}},
        {"optics",
         {"The laser cavity was aligned before each run.",
          "Parametric oscillators were pumped by a pulsed laser.",
          "Detector arrays were cooled to reduce dark current.",
          "Optical coatings were deposited by sputtering."},
         {{"During the scan, the laser wavelength was {q}.", {{"nm", "nm"}, {"µm", "um"}}},
          {"The pixel pitch employed was {q}.", {{"µm", "um"}}},
          {"The pulse energy was maintained at {q}.", {{"mJ", "mJ"}, {"µJ", "uJ"}}}}},
        {"aerospace",
         {"The aircraft completed the flight test program.",
          "Wing loads were monitored by strain gauges.",
          "The missile airframe was tested in the wind tunnel.",
          "Satellite telemetry was recorded by the ground station."},
         {{"At altitude, the cruise speed was {q}.", {{"km/h", "km.h^-1"}, {"m/s", "m.s^-1"}}},
          {"At takeoff, the engine thrust reached {q}.", {{"kN", "kN"}}},
          {"The orbital altitude was approximately {q}.", {{"km", "km"}}}}},
        {"electronics",
         {"The amplifier board was shielded against interference.",
          "Transistor arrays were fabricated on silicon wafers.",
          "The circuit was simulated before fabrication.",
          "Antenna patterns were measured in an anechoic chamber."},
         {{"The supply voltage was set to {q}.", {{"V", "V"}, {"mV", "mV"}}},
          {"In all tests, the clock frequency was {q}.", {{"MHz", "MHz"}, {"GHz", "GHz"}}},
          {"Under load, the power consumption was {q}.", {{"mW", "mW"}, {"W", "W"}}}}},
    };
    return t;
}

std::string plain_value(Rng& rng) {
    switch (rng.below(3)) {
    case 0: return std::to_string(rng.between(1, 999));
    case 1: return fixed(rng.between(1, 99999), static_cast<int>(rng.between(1, 3)));
    default: return fixed(rng.between(1, 999), 1);
    }
}

std::string fill(std::string_view tmpl, const std::string& quantity) {
    std::string s(tmpl);
    auto at = s.find("{q}");
    s.replace(at, 3, quantity);
    return s;
}

}  // namespace

DocumentCorpus synth_documents(std::uint64_t seed, const DocumentCorpusOptions& opt) {
    if (opt.planted_docs > opt.n_docs) throw RangeError("more planted documents than documents");
    Rng rng(seed);
    DocumentCorpus corpus;
    const auto& all = topics();

    // Planted documents are spread evenly through the id space.
    std::vector<bool> planted(opt.n_docs, false);
    for (std::size_t k = 0; k < opt.planted_docs; ++k) planted[k * opt.n_docs / opt.planted_docs] = true;
    std::size_t planted_seen = 0;

    const int width = static_cast<int>(std::to_string(std::max<std::size_t>(opt.n_docs, 1)).size());
    for (std::size_t d = 0; d < opt.n_docs; ++d) {
        char id[32];
        std::snprintf(id, sizeof id, "doc-%0*zu", width, d);
        const auto& topic = planted[d] ? all[0] : all[rng.below(all.size())];
        std::vector<std::string> sentences;
        const auto& [first_tmpl, first_units] = topic.measurements[rng.below(topic.measurements.size())];
        const auto& u = first_units[rng.below(first_units.size())];
        sentences.push_back(fill(first_tmpl, plain_value(rng) + " " + std::string(u.surface)));
        for (std::size_t s = 1; s < opt.sentences_per_doc; ++s) {
            if (rng.chance(0.3)) {
                const auto& [tmpl, units] = topic.measurements[rng.below(topic.measurements.size())];
                const auto& uu = units[rng.below(units.size())];
                sentences.push_back(fill(tmpl, plain_value(rng) + " " + std::string(uu.surface)));
            } else {
                sentences.push_back(std::string(topic.fillers[rng.below(topic.fillers.size())]));
            }
        }
        if (planted[d]) {
            std::string value, text;
            if (planted_seen == 0) {
                value = "0.001";
                text = "0.001";
            } else if (planted_seen == 1) {
                value = "10000";
                text = "10,000";
            } else {
                text = fixed(rng.between(1, 999999), 2);  // strictly inside (0.001, 10000)
                value = value_of(text);
            }
            const auto roll = rng.below(100);
            const std::string property = roll < 60 ? "penicillin" : roll < 85 ? "streptomycin" : "heparin";
            std::string sentence;
            if (rng.chance(0.5))
                sentence = "Cultures were supplemented with " + text + " U/mL of " + property + ".";
            else
                sentence = capitalize(property) + " was added at " + text + " U/mL to each well.";
            sentences.insert(sentences.begin() + static_cast<std::ptrdiff_t>(rng.below(sentences.size() + 1)),
                             sentence);
            corpus.planted.push_back({id, value, property});
            ++planted_seen;
        }
        std::string text;
        for (const auto& s : sentences) {
            if (!text.empty()) text += ' ';
            text += s;
        }
        corpus.documents.push_back({id, std::move(text)});
        corpus.topics.emplace_back(topic.name);
    }
    return corpus;
}

}  // namespace mqmine
