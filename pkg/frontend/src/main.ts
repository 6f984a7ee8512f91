import { ApiClient } from "./api.js";
import { initApp } from "./app.js";

// Served by the detox service itself, so relative URLs hit the same origin.
initApp(document, new ApiClient());
