"""Figure rendering for the report subcommands.

Every renderer takes the same rows that went into the CSV and writes a
PNG next to it; nothing here computes, it only draws.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def render_dims(rows, png_path):
    ns = [r["n"] for r in rows]
    ds = [r["d"] for r in rows]
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.step(ns, ds, where="mid", marker="o", markersize=3, label="d_n")
    ax.set_xlabel("weight n")
    ax.set_ylabel("d_n")
    ax.set_title("dimension bound sequence")
    if max(ds) > 50:
        ax.set_yscale("log")
    ax.legend()
    fig.tight_layout()
    fig.savefig(png_path, dpi=120)
    plt.close(fig)


def render_relations(rows, png_path):
    ns = [r["n"] for r in rows]
    fig, ax = plt.subplots(figsize=(7, 4))
    width = 0.27
    ax.bar([n - width for n in ns], [r["num_words"] for r in rows],
           width, label="admissible words")
    ax.bar(ns, [r["rank"] for r in rows], width, label="rank")
    ax.bar([n + width for n in ns], [r["upper_bound"] for r in rows],
           width, label="U_n")
    ax.plot(ns, [r["d_n"] for r in rows], "k*--", label="d_n")
    ax.set_xlabel("weight n")
    ax.set_xticks(ns)
    ax.set_title("relation rank and the resulting bound")
    ax.legend()
    fig.tight_layout()
    fig.savefig(png_path, dpi=120)
    plt.close(fig)


def render_purity(rows, png_path):
    ks = [r["word_length"] for r in rows]
    fig, ax = plt.subplots(figsize=(7, 4))
    ax.bar(ks, [r["cohomology_dim"] for r in rows], 0.6,
           label="total cohomology dim")
    ax.plot(ks, [r["expected"] for r in rows], "k*--", label="expected")
    ax.set_xlabel("word length k")
    ax.set_ylabel("dimension")
    ax.set_title("cohomology concentration by word length")
    ax.legend()
    fig.tight_layout()
    fig.savefig(png_path, dpi=120)
    plt.close(fig)


def render_sweep(rows, png_path):
    names = [r["name"] for r in rows]
    secs = [r["seconds"] for r in rows]
    colors = ["#2a9d2a" if r["pass"] else "#c03030" for r in rows]
    fig, ax = plt.subplots(figsize=(7, 0.4 * len(rows) + 1.5))
    ax.barh(range(len(rows)), secs, color=colors)
    ax.set_yticks(range(len(rows)))
    ax.set_yticklabels(names, fontsize=8)
    ax.invert_yaxis()
    ax.set_xlabel("seconds (green = pass, red = fail)")
    ax.set_title("sweep timing")
    fig.tight_layout()
    fig.savefig(png_path, dpi=120)
    plt.close(fig)
