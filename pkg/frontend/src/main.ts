import { App } from "./app.js";

const params = new URLSearchParams(window.location.search);
const api = params.get("api") ?? "http://127.0.0.1:8080";
const root = document.getElementById("app");
if (root) new App(root, api);
