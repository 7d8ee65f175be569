/** Edge-weight buckets. The server assigns buckets ((0,0.2]->1 ... (0.8,1]->5)
 * and serializes them with each viz edge; `bucketForWeight` mirrors that
 * contract for fixtures and sanity checks only. */

export function bucketForWeight(weight: number): number | null {
  if (weight < 0 || weight > 1) {
    throw new RangeError(`weight outside [0,1]: ${weight}`);
  }
  if (weight === 0) return null;
  return Math.min(5, Math.ceil(weight / 0.2 - 1e-12));
}

/** Fixed stroke widths, one per bucket (thicker means more similar). */
const STROKE_WIDTHS = [0.5, 1, 2, 3.5, 5];

export function strokeWidthForBucket(bucket: number): number {
  if (!Number.isInteger(bucket) || bucket < 1 || bucket > 5) {
    throw new RangeError(`bucket outside 1..5: ${bucket}`);
  }
  return STROKE_WIDTHS[bucket - 1];
}
