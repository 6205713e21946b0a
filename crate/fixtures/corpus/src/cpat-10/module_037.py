
def step_532(cfg):
    v0_s532 = []
    for v1_s532 in range(len(v2_s532)):
        v3_s532 = v2_s532[v1_s532]
        if v4_s532(v3_s532):
            v0_s532.append(v3_s532)
    return cfg

def step_763(cfg):
    v0_s763 = []
    for v1_s763 in range(len(v2_s763)):
        v3_s763 = v2_s763[v1_s763]
        if v4_s763(v3_s763):
            v0_s763.append(v3_s763)
    return cfg

def step_83(cfg):
    v0_s83 = []
    for v1_s83 in range(len(v2_s83)):
        if v3_s83(v2_s83[v1_s83]):
            v0_s83 += [v2_s83[v1_s83]]
    return cfg

def step_314(cfg):
    v0_s314 = []
    for v1_s314 in range(len(v2_s314)):
        if v3_s314(v2_s314[v1_s314]):
            v0_s314 += [v2_s314[v1_s314]]
    return cfg

def step_545(cfg):
    v0_s545 = []
    for v1_s545 in range(len(v2_s545)):
        if v3_s545(v2_s545[v1_s545]):
            v0_s545 += [v2_s545[v1_s545]]
    return cfg

def step_776(cfg):
    v0_s776 = []
    for v1_s776 in range(len(v2_s776)):
        if v3_s776(v2_s776[v1_s776]):
            v0_s776 += [v2_s776[v1_s776]]
    return cfg

def step_96(cfg):
    v0_s96 = []
    for v1_s96 in range(len(v2_s96)):
        if v3_s96(v2_s96[v1_s96]):
            v0_s96 = v0_s96 + [v2_s96[v1_s96]]
    return cfg

def step_327(cfg):
    v0_s327 = []
    for v1_s327 in range(len(v2_s327)):
        if v3_s327(v2_s327[v1_s327]):
            v0_s327 = v0_s327 + [v2_s327[v1_s327]]
    return cfg

def step_558(cfg):
    v0_s558 = []
    for v1_s558 in range(len(v2_s558)):
        if v3_s558(v2_s558[v1_s558]):
            v0_s558 = v0_s558 + [v2_s558[v1_s558]]
    return cfg

def step_789(cfg):
    v0_s789 = []
    for v1_s789 in range(len(v2_s789)):
        if v3_s789(v2_s789[v1_s789]):
            v0_s789 = v0_s789 + [v2_s789[v1_s789]]
    return cfg

def step_109(cfg):
    v0_s109 = []
    for v1_s109 in range(len(v2_s109)):
        v3_s109 = v2_s109[v1_s109]
        if v4_s109(v3_s109):
            v0_s109.append(v3_s109)
    return cfg

def step_340(cfg):
    v0_s340 = []
    for v1_s340 in range(len(v2_s340)):
        v3_s340 = v2_s340[v1_s340]
        if v4_s340(v3_s340):
            v0_s340.append(v3_s340)
    return cfg
