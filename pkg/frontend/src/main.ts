import { ApiClient, resolveApiBase } from "./api.js";
import { App } from "./app.js";

async function bootstrap(): Promise<void> {
  const host = document.getElementById("app");
  if (!host) throw new Error("missing #app container");
  const base = await resolveApiBase();
  const app = new App(host, new ApiClient(base));
  await app.start();
}

void bootstrap();
