import { defineConfig } from "vitest/config";

// The dev server proxies /api to a locally running `splittergame serve`.
export default defineConfig({
  server: {
    proxy: {
      "/api": "http://127.0.0.1:8000",
    },
  },
  test: {
    environment: "jsdom",
    testTimeout: 30000,
    hookTimeout: 30000,
  },
});
