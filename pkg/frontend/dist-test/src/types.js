/** Payload shapes of the backend JSON API (the parts the UI consumes). */
export {};
