import { ApiClient } from "./api.js";
import { App } from "./app.js";

declare global {
  interface Window {
    VAGUEQUERY_API?: string;
    VAGUEQUERY_DATASET?: string;
  }
}

const root = document.getElementById("app");
if (root !== null) {
  const api = new ApiClient(window.VAGUEQUERY_API ?? "");
  const app = new App(root, api);
  void app.start(window.VAGUEQUERY_DATASET ?? "nations").catch((error) => {
    root.insertAdjacentText("beforeend", `failed to start: ${String(error)}`);
  });
}
