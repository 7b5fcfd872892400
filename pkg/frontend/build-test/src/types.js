/** Payload shapes of the /api/v1 service. The UI renders these verbatim and
 * never computes probabilities on its own. */
export {};
