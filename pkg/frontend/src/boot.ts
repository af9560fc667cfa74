// Browser entry point: mount the app on #app against the same origin.

import { createApp } from './main.js';

const root = document.getElementById('app');
if (root) {
  createApp(root);
}
