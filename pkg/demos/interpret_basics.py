"""
Reading a vague query against a table
=====================================

Walks one utterance through the whole pipeline: tokenize and tag,
pick the vague modifier, rank attributes by co-occurrence strength,
turn sentiment polarity into top/bottom directives, and resolve the
numeric ranges that end up in the chart.
"""

from vaguequery import (
    Interpreter,
    build_provenance,
    choose_chart,
    load_resources,
    new_session,
)
from vaguequery.server import load_datasets

# load the shipped corpus, lexicons, registry, and the bundled tables
resources = load_resources()
datasets = load_datasets(None)
nations = datasets["nations"]

print("dataset:", nations.name)
for attr in nations.attributes:
    print(f"  {attr.display_name:20s} kind={attr.kind.value}")

# an interpreter is stateless; per-user state lives in a session
engine = Interpreter(resources)
session = new_session(nations)

utterance = "which countries are struggling?"
print("\nutterance:", utterance)
result = engine.interpret(utterance, session)

# the modifier the parser picked, and how its sentiment reads
modifier = result.query.modifier
print("modifier:", modifier.token.text, f"({modifier.classification.value})")
print("sentiment:", result.modifier_verdict.klass.value)

# every numeric attribute scored by pointwise mutual information;
# the two strongest co-occurring ones become the default active set
print("\nco-occurrence ranking:")
for score in result.scored:
    print(
        f"  {score.attribute:20s} pmi={score.pmi:.3f} "
        f"(won via '{score.modifier_ngram}' x '{score.attribute_ngram}')"
    )

# each filter is a concrete numeric range with provenance
print("\nfilters:")
for f in result.filters:
    directive = result.verdicts[f.attribute]
    print(
        f"  {directive.kind.value:8s} {f.attribute:20s} "
        f"[{f.lo}, {f.hi}]  ({f.provenance.value})"
    )

# the provenance text is what a user would see, segment by segment
provenance = build_provenance(result)
print("\nreads as:", "".join(s.text for s in provenance.segments))

# and the declarative chart spec the frontend renders
chart = choose_chart(result, nations)
print("\nchart:", chart.mark.value, chart.encodings)
print("rows kept:", [r["country"] for r in chart.rows])
