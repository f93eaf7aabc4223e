"""
Repairing an interpretation, one event at a time
================================================

The engine's guesses are defaults, not verdicts. Every correction --
dragging a range, adding or removing an attribute -- is appended to the
session's event log and survives re-asking the same question. Replaying
the log on a fresh session rebuilds the exact same interpretation.
"""

from vaguequery import Interpreter, load_resources, new_session
from vaguequery.server import load_datasets

resources = load_resources()
nations = load_datasets(None)["nations"]
engine = Interpreter(resources)
session = new_session(nations)

utterance = "which countries are struggling?"
result = engine.interpret(utterance, session)
print("defaults:", [(f.attribute, f.lo, f.hi) for f in result.filters])

# 1. the user thinks the income cutoff is too tight and widens it
result = engine.refine_range(session, "income per capita", 0, 8000)
income = next(f for f in result.filters if f.attribute == "income per capita")
print("\nafter widening income:", (income.lo, income.hi, income.provenance.value))

# 2. they pull in a third attribute the ranking left out
result = engine.add_attribute(session, "population")
print("after adding population:", result.active)
print("widgets stay capped at two:", [w.attribute for w in result.widgets])

# 3. life expectancy wasn't what they meant at all
result = engine.remove_attribute(session, "life expectancy")
print("after removing life expectancy:", result.active)

# 4. re-asking the same question keeps every correction
result = engine.interpret(utterance, session)
income = next(f for f in result.filters if f.attribute == "income per capita")
print("\nre-asked; income override still", (income.lo, income.hi))
print("life expectancy still gone:", "life expectancy" not in result.active)

# the log is the whole story of the session
print("\nevent log:")
for event in session.events:
    print(" ", event)

# replay: the same events on a fresh session give the same reading
fresh = new_session(nations)
fresh.events.extend(session.events)
replayed = engine.interpret(utterance, fresh)
print("\nreplay reproduces the interpretation:", replayed == result)
