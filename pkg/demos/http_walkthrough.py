"""
The same engine over HTTP
=========================

Everything the library does is reachable through a small JSON API;
this trades the in-process calls of the other demos for the endpoints
a browser frontend talks to. Runs in-process via the test client, so
no server needs to be started.
"""

import json

from fastapi.testclient import TestClient

from vaguequery.api_service import create_app
from vaguequery.server import load_datasets

app = create_app(datasets=load_datasets(None))
client = TestClient(app)

# upload a tiny table of our own next to the bundled ones
csv = (
    "city,airQualityIndex,rent\n"
    "Aberdeen,20,900\n"
    "Brigg,55,700\n"
    "Calder,160,450\n"
    "Dunwich,80,620\n"
    "Elmsworth,30,1500\n"
)
uploaded = client.post("/datasets", json={"name": "cities", "csv": csv}).json()
print("uploaded:", uploaded["name"], "rows:", uploaded["row_count"])
for attr in uploaded["attributes"]:
    print(f"  {attr['name']:18s} kind={attr['kind']}")

# sessions are scoped to one dataset
session_id = client.post("/sessions", json={"dataset": "earthquakes"}).json()[
    "session_id"
]
print("\nsession:", session_id)

# interpret a vague utterance
payload = client.post(
    f"/sessions/{session_id}/interpret",
    json={"utterance": "show me unsafe places"},
).json()

interp = payload["interpretation"]
print("\nmodifier:", interp["modifier"])
print("filters:", json.dumps(interp["filters"], indent=2))

# the filter came from a registered domain scale, and says so
prov = "".join(s["text"] for s in payload["provenance_text"]["segments"])
print("reads as:", prov)
links = [s["link"] for s in payload["provenance_text"]["segments"] if s["link"]]
print("source:", links[0])

print("\nchart:", payload["chart_spec"]["mark"], payload["chart_spec"]["encodings"])
print("rows inline:", len(payload["chart_spec"]["rows"]))

# corrections go through /refine and come back as a full re-read
refined = client.post(
    f"/sessions/{session_id}/refine",
    json={"action": "set_range", "attribute": "earthquake magnitude", "lo": 6, "hi": 10},
).json()
f = refined["interpretation"]["filters"][0]
print("\nafter refine:", f["lo"], "-", f["hi"], f"({f['provenance']})")
print("rows now:", len(refined["chart_spec"]["rows"]))

# bad input gets a flat, typed error instead of a stack trace
error = client.post(
    f"/sessions/{session_id}/interpret", json={"utterance": "asdf qwerty"}
)
print("\ngibberish ->", error.status_code, error.json()["code"])
