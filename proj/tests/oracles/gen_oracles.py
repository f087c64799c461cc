#!/usr/bin/env python3
"""Regenerates the frozen oracle fixtures under tests/data/.

Requires: vaderSentiment 3.3.2, statsmodels, scikit-learn, numpy.
The C++ test suites never call this script; they read its committed output.

    python3 tests/oracles/gen_oracles.py
"""
import json
import math
import os
import random

import numpy as np

HERE = os.path.dirname(os.path.abspath(__file__))
DATA = os.path.join(HERE, "..", "data")

MASK = (1 << 64) - 1


# Same generator as include/ballotwire/rng.hpp (splitmix64-seeded xoshiro256**).
class Xoshiro:
    def __init__(self, seed):
        sm = seed & MASK
        self.s = []
        for _ in range(4):
            sm = (sm + 0x9E3779B97F4A7C15) & MASK
            z = sm
            z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
            z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
            self.s.append(z ^ (z >> 31))

    @staticmethod
    def _rotl(x, k):
        return ((x << k) | (x >> (64 - k))) & MASK

    def next_u64(self):
        s = self.s
        result = (self._rotl((s[1] * 5) & MASK, 7) * 9) & MASK
        t = (s[1] << 17) & MASK
        s[2] ^= s[0]
        s[3] ^= s[1]
        s[1] ^= s[2]
        s[0] ^= s[3]
        s[2] ^= t
        s[3] = self._rotl(s[3], 45)
        return result

    def uniform(self):
        return (self.next_u64() >> 11) * (1.0 / 9007199254740992.0)

    def normal(self):
        u1 = 1.0 - self.uniform()
        u2 = self.uniform()
        return math.sqrt(-2.0 * math.log(u1)) * math.cos(2.0 * math.pi * u2)


# ---------------------------------------------------------------- sentiment

def sentiment_corpus():
    texts = [
        "", "good", "The movie was GOOD!!", "The movie was good.",
        "VADER is smart, handsome, and funny.",
        "VADER is smart, handsome, and funny!",
        "VADER is very smart, handsome, and funny.",
        "VADER is VERY SMART, handsome, and FUNNY.",
        "VADER is VERY SMART, handsome, and FUNNY!!!",
        "VADER is VERY SMART, uber handsome, and FRIGGIN FUNNY!!!",
        "VADER is not smart, handsome, nor funny.",
        "The book was good.",
        "At least it isn't a horrible book.",
        "The book was only kind of good.",
        "The plot was good, but the characters are uncompelling and the dialog is not great.",
        "Today SUX!", "Today only kinda sux! But I'll get by, lol",
        "Make sure you :) or :D today!",
        "Catch utf-8 emoji such as 💘 and 💋 and 😁",
        "Not bad at all",
        "#Biden is a great leader", "#Trump is a great leader",
        "#JoeBiden will lose. Sad!", "#DonaldTrump rally was a disaster",
        "I hate this election", "I love this election!!!!",
        "No good options this year", "no", "No.", "no problem at all",
        "There is no way this is good", "no love or hate",
        "Never so happy in my life", "never this bad",
        "without doubt the best debate", "without a doubt great",
        "It was the shit", "this debate is the bomb", "bad ass speech",
        "yeah right, he will win", "that was the kiss of death",
        "a policy to die for", "the bus stop was empty",
        "least good", "at least good", "very least good", "the least bad option",
        "kind of bad", "sort of good", "just enough support",
        "I don't trust him", "I can't believe how great this is",
        "He isn't honest", "not not good",
        "This is GREAT", "THIS IS GREAT", "This is GREAT!!!!!!",
        "Is this good??", "Is this good???", "Is this good?????",
        "Is this good?", "what?? terrible!!",
        "extremely bad", "EXTREMELY bad", "barely good", "BARELY good",
        "really really really good", "so so good",
        "Good, but not great", "Great but bad", "bad but great",
        "but", "good but", "but good",
        "😀😀😀", "I am 😡", "the vote 🗳 is in", "🇺🇸 proud",
        "   padded   with   spaces   ", "tab\tseparated\tgood",
        "line\nbreak great", ":-)", ":(", ";)", "<3 you",
        "Ünïcödé words and great", "ÉLECTION is GREAT", "café good",
        "GOOD", "good!", "GOOD!", "g o o d", "goooood",
        "!!!", "???", "...", "#", "@user", "http://t.co/abc good",
        "RT @Biden: we will win", "lol", "LOL this is funny",
        "the fucking best", "uber cool", "hella bad",
        "I'm not sure this is not bad", "didn't love it",
        "nothing good happened", "nowhere near good",
        "He never fails", "despite the rain, great turnout",
        "It's not the worst", "aint no sunshine",
        "good good good good good good good good good good",
        "bad " * 30,
        "kind of good but kind of bad",
        "The economy is strong but the debt is a disaster",
        "He was neither good nor bad",
        "Not good, not bad, just ok",
        "Hopeful about #Biden, scared of #Trump",
        "#Trump2020 #MAGA winning!!", "#Biden2020 hope wins",
        "VOTE!!! it matters", "Honest question: who won??",
        "fake news everywhere", "what a liar", "LIAR", "total liar",
        "totally awesome", "TOTALLY awesome", "awesome",
    ]
    vocab_pos = ["good", "great", "love", "happy", "win", "hope", "strong",
                 "best", "proud", "nice", "excellent", "honest", "trust", "hero"]
    vocab_neg = ["bad", "terrible", "hate", "sad", "lose", "weak", "worst",
                 "fear", "angry", "wrong", "awful", "fail", "liar", "disaster"]
    boosters = ["very", "extremely", "so", "really", "barely", "slightly",
                "kinda", "totally", "hardly", "most"]
    negs = ["not", "never", "don't", "isn't", "no", "without", "nor", "cannot"]
    neutral = ["the", "debate", "#Biden", "#Trump", "today", "vote", "is",
               "was", "this", "rally", "America", "and", "of", "kind", "at",
               "least", "but", "or", "doubt", "this", "😀", "💔", "🗳"]
    punct = ["", "", "", "!", "!!", "?", "??", "???", ".", ",", "!!!!!"]
    rnd = random.Random(20201103)
    while len(texts) < 200:
        n = rnd.randint(2, 12)
        words = []
        for _ in range(n):
            pool = rnd.choice([vocab_pos, vocab_neg, boosters, negs, neutral, neutral])
            w = rnd.choice(pool)
            r = rnd.random()
            if r < 0.12:
                w = w.upper()
            elif r < 0.2:
                w = w.capitalize()
            if rnd.random() < 0.1:
                w += rnd.choice([",", ".", "!"])
            words.append(w)
        texts.append(" ".join(words) + rnd.choice(punct))
    assert len(texts) == 200
    return texts


def gen_sentiment():
    from vaderSentiment import vaderSentiment as vs

    analyzer = vs.SentimentIntensityAnalyzer()
    rounded = [analyzer.polarity_scores(t) for t in sentiment_corpus()]
    # Unrounded scores: shadow the builtin used inside score_valence.
    vs.round = lambda x, n=None: x
    out = []
    for text, r in zip(sentiment_corpus(), rounded):
        raw = analyzer.polarity_scores(text)
        out.append({
            "text": text,
            "compound": raw["compound"],
            "pos": raw["pos"],
            "neu": raw["neu"],
            "neg": raw["neg"],
            "compound_rounded": r["compound"],
        })
    del vs.round
    with open(os.path.join(DATA, "sentiment_oracle.json"), "w", encoding="utf-8") as f:
        json.dump({"generator": "vaderSentiment 3.3.2", "cases": out}, f,
                  ensure_ascii=False, indent=1)


# ---------------------------------------------------------------- adf

def adf_series(i, n=200):
    rng = Xoshiro(42 + i)
    eps = [rng.normal() for _ in range(n)]
    if i < 5:
        y, acc = [], 0.0
        for e in eps:
            acc = acc + e
            y.append(acc)
        return "random_walk", y
    return "white_noise", eps


def gen_adf():
    import statsmodels
    from statsmodels.tsa.stattools import adfuller
    from statsmodels.tsa.adfvalues import mackinnonp

    series = []
    for i in range(10):
        kind, y = adf_series(i)
        x = np.asarray(y)
        stat, p, lag, nobs, _, ic = adfuller(x, regression="c", autolag="AIC")
        fixed = {}
        for k in (0, 1, 3):
            s2, p2, l2, n2, _ = adfuller(x, maxlag=k, regression="c", autolag=None)
            fixed[str(k)] = {"statistic": s2, "p_value": p2, "n_obs": n2}
        series.append({
            "seed": 42 + i, "kind": kind, "values": y,
            "statistic": stat, "p_value": p, "lag_used": lag, "n_obs": nobs,
            "aic": ic, "fixed_lag": fixed,
        })
    grid = [-20.0, -18.9, -6.0, -4.5, -3.5, -2.86, -2.0, -1.61, -1.6, -1.0,
            0.0, 1.0, 2.5, 2.74, 3.0]
    pvals = [{"statistic": t, "p_value": float(mackinnonp(t, regression="c", N=1))}
             for t in grid]
    # short series: exercises the default maxlag cap at small n
    rng = Xoshiro(2020)
    short = [rng.normal() for _ in range(20)]
    stat, p, lag, nobs, _, _ = adfuller(np.asarray(short), regression="c", autolag="AIC")
    with open(os.path.join(DATA, "adf_oracle.json"), "w") as f:
        json.dump({
            "generator": "statsmodels " + statsmodels.__version__ + " adfuller(regression='c', autolag='AIC')",
            "series": series, "pvalue_grid": pvals,
            "short": {"values": short, "statistic": stat, "p_value": p,
                      "lag_used": lag, "n_obs": nobs},
        }, f, indent=1)


# ---------------------------------------------------------------- regressors

def gen_models():
    import sklearn
    from sklearn.linear_model import ElasticNet, Lasso, Ridge
    from sklearn.svm import SVR

    rng = Xoshiro(99)
    n, p = 12, 3
    X = [[rng.normal() for _ in range(p)] for _ in range(n)]
    w_true = [1.5, -2.0, 0.5]
    y = [sum(a * b for a, b in zip(row, w_true)) + 3.0 + 0.3 * rng.normal() for row in X]
    Xa, ya = np.asarray(X), np.asarray(y)
    out = {"generator": "scikit-learn " + sklearn.__version__, "X": X, "y": y}
    m = Ridge(alpha=1.0).fit(Xa, ya)
    out["ridge"] = {"lambda": 1.0, "weights": m.coef_.tolist(), "intercept": float(m.intercept_)}
    m = Lasso(alpha=0.1, tol=1e-12, max_iter=100000).fit(Xa, ya)
    out["lasso"] = {"lambda": 0.1, "weights": m.coef_.tolist(), "intercept": float(m.intercept_)}
    m = ElasticNet(alpha=0.1, l1_ratio=0.5, tol=1e-12, max_iter=100000).fit(Xa, ya)
    out["elastic_net"] = {"lambda": 0.1, "mix": 0.5, "weights": m.coef_.tolist(),
                          "intercept": float(m.intercept_)}
    for kernel in ("linear", "rbf"):
        m = SVR(kernel=kernel, C=1.0, epsilon=0.1, tol=1e-10, gamma="scale").fit(Xa, ya)
        out["svr_" + kernel] = {"C": 1.0, "epsilon": 0.1,
                                "predictions": m.predict(Xa).tolist(),
                                "gamma": float(1.0 / (p * Xa.var()))}
    with open(os.path.join(DATA, "regressor_oracle.json"), "w") as f:
        json.dump(out, f, indent=1)


if __name__ == "__main__":
    os.makedirs(DATA, exist_ok=True)
    gen_sentiment()
    gen_adf()
    gen_models()
    print("oracle fixtures written to", os.path.normpath(DATA))
