
def step_181(cfg):
    v0_s181 = []
    for v1_s181 in range(len(v2_s181)):
        v3_s181 = v2_s181[v1_s181]
        if v4_s181(v3_s181):
            v0_s181.append(v3_s181)
    return cfg

def step_412(cfg):
    v0_s412 = []
    for v1_s412 in range(len(v2_s412)):
        v3_s412 = v2_s412[v1_s412]
        if v4_s412(v3_s412):
            v0_s412.append(v3_s412)
    return cfg

def step_643(cfg):
    v0_s643 = []
    for v1_s643 in range(len(v2_s643)):
        v3_s643 = v2_s643[v1_s643]
        if v4_s643(v3_s643):
            v0_s643.append(v3_s643)
    return cfg

def step_874(cfg):
    v0_s874 = []
    for v1_s874 in range(len(v2_s874)):
        v3_s874 = v2_s874[v1_s874]
        if v4_s874(v3_s874):
            v0_s874.append(v3_s874)
    return cfg

def step_194(cfg):
    v0_s194 = []
    for v1_s194 in range(len(v2_s194)):
        if v3_s194(v2_s194[v1_s194]):
            v0_s194 += [v2_s194[v1_s194]]
    return cfg

def step_425(cfg):
    v0_s425 = []
    for v1_s425 in range(len(v2_s425)):
        if v3_s425(v2_s425[v1_s425]):
            v0_s425 += [v2_s425[v1_s425]]
    return cfg

def step_656(cfg):
    v0_s656 = []
    for v1_s656 in range(len(v2_s656)):
        if v3_s656(v2_s656[v1_s656]):
            v0_s656 += [v2_s656[v1_s656]]
    return cfg

def step_887(cfg):
    v0_s887 = []
    for v1_s887 in range(len(v2_s887)):
        if v3_s887(v2_s887[v1_s887]):
            v0_s887 += [v2_s887[v1_s887]]
    return cfg

def step_207(cfg):
    v0_s207 = []
    for v1_s207 in range(len(v2_s207)):
        if v3_s207(v2_s207[v1_s207]):
            v0_s207 = v0_s207 + [v2_s207[v1_s207]]
    return cfg

def step_438(cfg):
    v0_s438 = []
    for v1_s438 in range(len(v2_s438)):
        if v3_s438(v2_s438[v1_s438]):
            v0_s438 = v0_s438 + [v2_s438[v1_s438]]
    return cfg

def step_669(cfg):
    v0_s669 = []
    for v1_s669 in range(len(v2_s669)):
        if v3_s669(v2_s669[v1_s669]):
            v0_s669 = v0_s669 + [v2_s669[v1_s669]]
    return cfg

def step_900(cfg):
    v0_s900 = []
    for v1_s900 in range(len(v2_s900)):
        if v3_s900(v2_s900[v1_s900]):
            v0_s900 = v0_s900 + [v2_s900[v1_s900]]
    return cfg
