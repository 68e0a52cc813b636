#!/usr/bin/env python3
"""Regenerates data/lexicon.tsv from the word lists below.

Each output line is `word TAB tag1,tag2,...` with the most frequent tag first.
Regular inflections are expanded here; irregular forms are listed explicitly.
"""
import pathlib

CLOSED = {
    "DT": "a an the this that these those each every either neither another some any no all both half such".split(),
    "IN": ("of in on at by for with from into onto upon about above across after against along among around "
           "before behind below beneath beside besides between beyond despite during except inside near "
           "outside over per since than through throughout toward towards under underneath unlike until "
           "via within without whereas while whether although though because if unless as like once till "
           "amid amongst versus vs. circa").split(),
    "CC": "and or but nor yet plus".split(),
    "TO": ["to"],
    "PRP": "i you he she it we they me him her us them itself themselves himself herself ourselves myself one".split(),
    "PRP$": "my your his its our their".split(),
    "WDT": "which whichever".split(),
    "WP": "who whom what whoever".split(),
    "WP$": ["whose"],
    "WRB": "when where why how whenever wherever".split(),
    "MD": "can could may might must shall should will would".split(),
    "EX": ["there"],
    "RP": [],
    "UH": "oh yes".split(),
    "POS": ["'s"],
    "PDT": [],
}

# Ambiguous closed-class entries: first tag is the most frequent.
AMBIGUOUS = {
    "that": "IN,DT,WDT", "as": "IN,RB", "about": "IN,RB", "up": "RP,IN,RB", "down": "RP,IN,RB",
    "out": "RP,IN,RB", "off": "RP,IN,RB", "over": "IN,RP,RB", "before": "IN,RB", "after": "IN,RB",
    "since": "IN,RB", "near": "IN,JJ,RB", "above": "IN,JJ,RB", "below": "IN,RB", "around": "IN,RB",
    "like": "IN,VB,VBP", "once": "RB,IN", "there": "EX,RB", "one": "CD,PRP,NN", "no": "DT,RB,UH",
    "all": "DT,PDT", "both": "DT,CC", "either": "DT,CC", "neither": "DT,CC", "yet": "RB,CC",
    "so": "RB,IN", "plus": "CC,IN", "half": "NN,DT,PDT", "while": "IN,NN", "than": "IN",
    "per": "IN", "vs.": "IN", "versus": "IN", "but": "CC,IN", "for": "IN", "till": "IN",
    "least": "JJS,RBS", "most": "RBS,JJS", "more": "JJR,RBR", "less": "JJR,RBR", "fewer": "JJR",
    "much": "JJ,RB", "many": "JJ", "few": "JJ", "several": "JJ", "other": "JJ", "same": "JJ",
    "such": "JJ,PDT", "own": "JJ", "only": "RB,JJ", "well": "RB,JJ,NN", "even": "RB,JJ",
}

ADVERBS = ("not n't also very too quite rather almost nearly approximately roughly about around only just even "
           "still already often sometimes usually always never ever again further furthermore however "
           "therefore thus hence then now here there instead moreover respectively typically generally "
           "significantly slightly substantially considerably relatively highly fairly somewhat well "
           "up down out away back forward apart together alone else perhaps maybe probably possibly "
           "certainly clearly especially particularly primarily mainly mostly largely initially finally "
           "subsequently previously recently currently simultaneously independently directly "
           "approximately exactly precisely nominally consistently effectively rapidly slowly quickly "
           "strongly weakly easily readily fully partially completely entirely totally twice "
           "below above beyond later earlier soon yet so thereby whereby nevertheless nonetheless "
           "accordingly otherwise likewise").split()

ADJECTIVES = ("average mean maximum minimum nominal typical total high low large small long short wide narrow "
              "thick thin deep shallow heavy light fast slow strong weak hot cold warm cool dry wet new old "
              "young great good bad best worst better worse higher lower larger smaller longer shorter "
              "highest lowest largest smallest greatest early late final initial full empty single double "
              "multiple several various different similar same other certain specific particular general "
              "common rare important significant major minor main primary secondary principal critical "
              "optical thermal electrical electronic mechanical chemical physical biological medical "
              "clinical structural magnetic acoustic nuclear atomic molecular cellular longitudinal "
              "transverse lateral vertical horizontal radial axial angular linear nonlinear digital "
              "analog spectral spatial temporal parametric infrared ultraviolet visible dielectric "
              "metallic ceramic composite elastic plastic tensile compressive residual relative absolute "
              "effective actual available possible potential necessary sufficient standard normal "
              "positive negative neutral constant variable stable unstable uniform continuous discrete "
              "internal external upper inner outer central local global overall entire whole complete "
              "partial free open closed active passive direct indirect fuming sulfuric nitric "
              "hydrochloric acetic liquid solid gaseous aqueous organic inorganic synthetic natural "
              "human clinical malignant benign prostate breast ambient ultimate peak nominal median "
              "cryogenic superconducting semiconducting conductive resistive capacitive inductive "
              "detected measured nominal red blue green black white able unable likely unlikely "
              "due subject present current previous recent future next last first second third "
              "key novel robust accurate precise reliable efficient optimal real numerical experimental "
              "theoretical empirical statistical quantitative qualitative dense sparse rough smooth "
              "fine coarse soft hard rigid flexible porous bulk thin-film oral intravenous daily "
              "annual weekly monthly dual triple quadruple ferroelectric piezoelectric photonic "
              "quantum classical cosmic solar lunar terrestrial atmospheric oceanic ballistic "
              "aerodynamic hydrodynamic turbulent laminar viscous inviscid adiabatic isothermal").split()

# Nouns: singular forms; plurals are derived.
NOUNS = ("accuracy acid activity adhesion algorithm alloy amplitude analysis angle antibody antigen "
         "aperture apparatus application approach area array assay atmosphere attenuation axis "
         "bandwidth band bar base battery beam behavior bias bit blade blood body bond boundary "
         "brightness buffer cable calibration cancer capacitance capacity carbon cell center chamber "
         "channel charge chip circuit coating coefficient coil component composition compound "
         "concentration condition conductivity configuration constant contact content contrast control "
         "core correlation cost coupling crack cross-section crystal culture current curvature curve "
         "cycle damage data decay defect deflection degradation delay density depth design detector "
         "deviation device diameter diffusion dimension diode displacement distance distribution dose "
         "drag drift drug duration efficiency electrode electron element emission energy engine "
         "enzyme error estimate experiment exposure factor failure fatigue feature fiber field film "
         "filter flow fluence fluid flux focus force fraction frame frequency fuel function gain gap "
         "gas gene generator geometry gradient grain gravity group growth hardness heat height hole "
         "humidity image impedance impact implant increase index inductance infection injection "
         "input intensity interaction interval ion irradiance laser layer length lens level lifetime "
         "light limit line load loss magnitude mass material matrix measurement mechanism medium "
         "membrane metal method mixture mode model modulus moisture molecule moment momentum motion "
         "noise number object operation orbit order output oscillator oxygen panel parameter particle "
         "patient peak penicillin percentage performance period permeability phase photon pitch pixel "
         "plasma plate point polymer population porosity position potential power precision pressure "
         "probe process product profile property protein pulse purity quality range rate ratio "
         "reaction receiver reduction region resistance resolution response responsivity result "
         "rod rotation sample scale scan sensitivity sensor serum shape shift signal size slope "
         "solution source spacing specimen spectrum speed spot stability stage step stiffness strain "
         "strength stress structure study substrate surface system target temperature tension test "
         "thickness threshold time tissue torque toughness transition transmission treatment trial "
         "tube tumor unit uptake value velocity vessel viscosity voltage volume wall water wave "
         "wavelength weight width wire yield zone cm site tip disk target level rate mode "
         "distance earth sun moon universe reactor turbine wing fuselage aircraft vehicle missile "
         "satellite antenna radar sonar array transducer amplifier pump oscillation resonance "
         "melting boiling freezing thermal conduction convection radiation absorption reflection "
         "refraction scattering diffraction interference polarization birefringence doping "
         "concentration dosage serum plasma cell-line cohort subject participant mouse mice rat "
         "dog pig child adult men women man woman doctor nurse hospital clinic laboratory lab "
         "area floor room building bridge road river sea ocean lake air ground soil rock sand "
         "iron steel copper aluminum titanium silicon gold silver glass concrete wood plastic paper "
         "streptomycin interferon insulin heparin trypsin lipase amylase protease antibiotic "
         "vaccine virus bacteria bacterium fungus yeast strain colony plaque prostate breast lung "
         "liver kidney heart brain bone muscle skin tumor carcinoma lymphoma leukemia melanoma "
         "cancer research program grant project report paper table figure section equation page "
         "work year day hour week month minute second period phase stage time life rate case example "
         "way part place fact problem question issue result effect change difference increase decrease "
         "use number amount level kind type form side end term").split()

IRREGULAR_PLURAL = {"analysis": "analyses", "apparatus": "apparatus", "axis": "axes", "bacterium": "bacteria",
                    "criterion": "criteria", "datum": "data", "index": "indices", "matrix": "matrices",
                    "medium": "media", "mouse": "mice", "phenomenon": "phenomena", "spectrum": "spectra",
                    "man": "men", "woman": "women", "child": "children", "foot": "feet", "tooth": "teeth",
                    "vertex": "vertices", "radius": "radii", "nucleus": "nuclei", "hypothesis": "hypotheses",
                    "basis": "bases", "thesis": "theses", "data": "data", "mice": "mice", "men": "men",
                    "women": "women", "bacteria": "bacteria", "series": "series", "species": "species"}

# Verbs: base forms with optional irregular (past, participle) forms.
VERBS = ("achieve add adjust allow analyze apply approach assess assume attain attach bring build "
         "calculate cause change characterize choose collect combine compare compute conduct confirm "
         "consider consist contain continue control convert correspond create cut decrease define "
         "demonstrate depend derive describe design detect determine develop differ display drive "
         "employ enable enhance ensure establish estimate evaluate examine exceed exhibit expect "
         "experience explain expose extend extract fabricate fall find fix focus follow form generate "
         "give grow heat hold identify illustrate implement improve include increase indicate induce "
         "inject investigate involve keep know lead limit load locate lower maintain make measure "
         "meet modify monitor move need note observe obtain occur operate optimize perform place "
         "plot predict prepare present produce propose provide pump range reach read receive record "
         "reduce reflect relate remain remove report represent require reveal rise run scale see "
         "select set show simulate span stand start store study suggest supply support take test "
         "treat tune use vary yield administer dilute dissolve incubate irradiate anneal coat deposit "
         "cool mix stir wash centrifuge culture grow sample fit calibrate mount pitch register "
         "estimate tend seem appear become begin get go come put let say tell think try want work "
         "call ask feel leave mean turn help play stop reach open close raise achieve drop peak "
         "saturate decay oscillate resonate emit absorb transmit scatter diffract").split()

IRREGULAR_VERBS = {
    "be": None, "have": None, "do": None,
    "bring": ("brought", "brought"), "build": ("built", "built"), "choose": ("chose", "chosen"),
    "cut": ("cut", "cut"), "fall": ("fell", "fallen"), "find": ("found", "found"), "give": ("gave", "given"),
    "grow": ("grew", "grown"), "hold": ("held", "held"), "keep": ("kept", "kept"), "know": ("knew", "known"),
    "lead": ("led", "led"), "make": ("made", "made"), "meet": ("met", "met"), "read": ("read", "read"),
    "rise": ("rose", "risen"), "run": ("ran", "run"), "see": ("saw", "seen"), "set": ("set", "set"),
    "show": ("showed", "shown"), "stand": ("stood", "stood"), "take": ("took", "taken"),
    "become": ("became", "become"), "begin": ("began", "begun"), "get": ("got", "obtained"),
    "go": ("went", "gone"), "come": ("came", "come"), "put": ("put", "put"), "let": ("let", "let"),
    "say": ("said", "said"), "tell": ("told", "told"), "think": ("thought", "thought"),
    "feel": ("felt", "felt"), "leave": ("left", "left"), "mean": ("meant", "meant"),
}

# Words whose derived entries need a different tag order.
OVERRIDES = {
    "was": "VBD", "were": "VBD", "is": "VBZ", "are": "VBP", "be": "VB", "been": "VBN", "being": "VBG",
    "am": "VBP", "has": "VBZ", "have": "VBP,VB", "had": "VBD,VBN", "having": "VBG",
    "does": "VBZ", "do": "VBP,VB", "did": "VBD", "done": "VBN", "doing": "VBG",
    "set": "VBD,VBN,VB,NN", "employed": "VBN,VBD", "recorded": "VBN,VBD", "measured": "VBN,VBD,JJ",
    "used": "VBN,VBD,JJ", "observed": "VBN,VBD", "obtained": "VBN,VBD", "reported": "VBN,VBD",
    "found": "VBN,VBD", "determined": "VBN,VBD", "estimated": "VBN,VBD", "shown": "VBN",
    "fixed": "VBN,JJ", "detected": "VBN,JJ", "applied": "VBN,VBD", "maintained": "VBN,VBD",
    "held": "VBN,VBD", "kept": "VBN,VBD", "given": "VBN", "made": "VBN,VBD",
    "melting": "NN,VBG", "boiling": "NN,VBG", "freezing": "NN,VBG", "fuming": "JJ,VBG",
    "spacing": "NN,VBG", "coating": "NN,VBG", "scattering": "NN,VBG", "doping": "NN,VBG",
    "loading": "NN,VBG", "heating": "NN,VBG", "cooling": "NN,VBG", "setting": "NN,VBG",
    "reading": "NN,VBG", "operating": "VBG,JJ", "timing": "NN", "training": "NN,VBG",
    "sampling": "NN,VBG", "processing": "NN,VBG", "testing": "NN,VBG", "screening": "NN,VBG",
    "lower": "JJR,RBR,VB", "higher": "JJR,RBR", "greater": "JJR", "larger": "JJR", "smaller": "JJR",
    "longer": "JJR,RBR", "shorter": "JJR", "better": "JJR,RBR", "worse": "JJR,RBR",
    "highest": "JJS", "lowest": "JJS", "largest": "JJS", "smallest": "JJS", "greatest": "JJS",
    "best": "JJS,RBS", "worst": "JJS",
    "current": "JJ,NN", "average": "JJ,NN,VB", "mean": "JJ,NN,VB", "maximum": "JJ,NN", "minimum": "JJ,NN",
    "peak": "NN,JJ,VB", "total": "JJ,NN", "second": "JJ,NN", "light": "NN,JJ", "standard": "JJ,NN",
    "range": "NN,VB", "rate": "NN,VB", "scale": "NN,VB", "sample": "NN,VB", "test": "NN,VB",
    "study": "NN,VB", "record": "NN,VB", "yield": "NN,VB", "increase": "NN,VB", "decrease": "NN,VB",
    "change": "NN,VB", "use": "NN,VB", "load": "NN,VB", "scan": "NN,VB", "pitch": "NN,VB",
    "culture": "NN,VB", "control": "NN,VB", "design": "NN,VB", "form": "NN,VB", "focus": "NN,VB",
    "limit": "NN,VB", "measure": "VB,NN", "plot": "NN,VB", "pump": "NN,VB", "supply": "NN,VB",
    "support": "NN,VB", "work": "NN,VB", "drop": "NN,VB", "turn": "NN,VB", "start": "NN,VB",
    "stop": "NN,VB", "run": "NN,VB,VBN", "estimate": "NN,VB", "report": "NN,VB", "point": "NN,VB",
    "display": "NN,VB", "place": "NN,VB", "step": "NN,VB", "call": "NN,VB", "fit": "NN,VB,JJ",
    "help": "NN,VB", "need": "NN,VB", "mount": "NN,VB", "model": "NN,VB", "process": "NN,VB",
    "treatment": "NN", "ranges": "NNS,VBZ", "rates": "NNS,VBZ", "scans": "NNS,VBZ", "samples": "NNS,VBZ",
    "tests": "NNS,VBZ", "studies": "NNS,VBZ", "results": "NNS,VBZ", "values": "NNS,VBZ",
    "uses": "NNS,VBZ", "shows": "VBZ,NNS", "increases": "VBZ,NNS", "decreases": "VBZ,NNS",
    "changes": "NNS,VBZ", "measures": "NNS,VBZ", "levels": "NNS,VBZ", "points": "NNS,VBZ",
    "freq.": "NN", "approx.": "RB", "e.g.": "FW", "i.e.": "FW", "et": "FW", "al.": "FW", "fig.": "NN",
    "eq.": "NN", "ref.": "NN", "no.": "NN", "etc.": "FW",
    "found": "VBN,VBD", "left": "VBN,VBD,JJ,NN", "cut": "VBN,VBD,NN", "read": "VBD,VBN,VB",
    "put": "VBN,VBD,VB", "let": "VB,VBD", "led": "VBN,VBD", "met": "VBN,VBD",
    "data": "NNS", "series": "NN,NNS", "species": "NN,NNS", "means": "NNS,VBZ", "mice": "NNS",
    "cm": "NN", "earth": "NN", "sun": "NN", "moon": "NN", "s": "NNS", "en": "FW",
    "up": "RP,IN,RB", "one": "CD,PRP,NN", "two": "CD", "three": "CD", "four": "CD", "five": "CD",
    "six": "CD", "seven": "CD", "eight": "CD", "nine": "CD", "ten": "CD", "hundred": "CD",
    "thousand": "CD", "million": "CD", "billion": "CD", "dozen": "NN", "zero": "CD",
    "first": "JJ,RB", "third": "JJ", "last": "JJ,RB", "next": "JJ,IN", "late": "JJ,RB", "early": "JJ,RB",
    "high": "JJ,RB", "low": "JJ,RB", "long": "JJ,RB", "fast": "JJ,RB", "hard": "JJ,RB", "close": "JJ,VB,RB",
    "open": "JJ,VB", "present": "JJ,NN,VB", "free": "JJ", "due": "JJ", "able": "JJ",
    "field": "NN", "fields": "NNS", "large": "JJ", "roughly": "RB", "approximately": "RB",
}


def regular_verb_forms(base):
    if base.endswith("e"):
        past = base + "d"
        ing = base[:-1] + "ing"
    elif base.endswith("y") and base[-2] not in "aeiou":
        past = base[:-1] + "ied"
        ing = base + "ing"
    elif base in ("set", "cut", "put", "let", "run", "stir", "plot", "drop", "stop", "fit", "span"):
        past = base + base[-1] + "ed"
        ing = base + base[-1] + "ing"
    else:
        past = base + "ed"
        ing = base + "ing"
    if base.endswith(("s", "sh", "ch", "x", "z")):
        third = base + "es"
    elif base.endswith("y") and base[-2] not in "aeiou":
        third = base[:-1] + "ies"
    else:
        third = base + "s"
    return past, past, ing, third


def plural(noun):
    if noun in IRREGULAR_PLURAL:
        return IRREGULAR_PLURAL[noun]
    if noun.endswith(("s", "sh", "ch", "x", "z")):
        return noun + "es"
    if noun.endswith("y") and noun[-2] not in "aeiou":
        return noun[:-1] + "ies"
    return noun + "s"


def main():
    lex = {}

    def add(word, tag):
        tags = lex.setdefault(word, [])
        if tag not in tags:
            tags.append(tag)

    for tag, words in CLOSED.items():
        for w in words:
            add(w, tag)
    for w in NOUNS:
        add(w, "NN")
        add(plural(w), "NNS")
    for w in ADJECTIVES:
        add(w, "JJ")
    for w in ADVERBS:
        add(w, "RB")
    for w in ["be", "is", "are", "was", "were", "been", "being", "am", "have", "has", "had", "having",
              "do", "does", "did", "done", "doing"]:
        add(w, "VB")
    for base in VERBS:
        if base in IRREGULAR_VERBS and IRREGULAR_VERBS[base]:
            past, part = IRREGULAR_VERBS[base]
            _, _, ing, third = regular_verb_forms(base)
        else:
            past, part, ing, third = regular_verb_forms(base)
        add(base, "VB")
        add(base, "VBP")
        add(past, "VBD")
        add(part, "VBN")
        add(ing, "VBG")
        add(third, "VBZ")
    for w, tags in AMBIGUOUS.items():
        lex[w] = tags.split(",")
    for w, tags in OVERRIDES.items():
        lex[w] = tags.split(",")

    out = ["# word\ttags (most frequent first); generated by tools/build_lexicon.py"]
    for w in sorted(lex):
        out.append(f"{w}\t{','.join(lex[w])}")
    path = pathlib.Path(__file__).resolve().parent.parent / "data" / "lexicon.tsv"
    path.write_text("\n".join(out) + "\n")
    print(f"{len(lex)} entries -> {path}")


if __name__ == "__main__":
    main()
